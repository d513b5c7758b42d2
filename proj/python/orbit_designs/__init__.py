"""Cubature formulas and Euclidean designs from reflection-group orbits.

Thin Python layer over the C++ core: exact orbit enumeration for the
reflection groups A_n, B_n, D_n, invariant harmonic bases, design-strength
certification by three independent methods, the tight-design classification
tables, and planar cubature formulas for radially symmetric weights.
"""

import json as _json

from ._core import (
    __version__,
    classify,
    closed_forms,
    exponents,
    fisher,
    group_order,
    harm_basis,
    molien,
    orbit,
    orbit_size,
    precision,
    run,
    set_precision,
    strength,
    xu_build,
    xu_verify,
)

__all__ = [
    "__version__",
    "classify",
    "closed_forms",
    "check_design_file",
    "exponents",
    "fisher",
    "group_order",
    "harm_basis",
    "molien",
    "orbit",
    "orbit_size",
    "precision",
    "run",
    "set_precision",
    "strength",
    "xu_build",
    "xu_verify",
]


def check_design_file(path, tmax=8):
    """Certify the strength of a design stored in a JSON file."""
    with open(path, "r", encoding="utf-8") as f:
        return strength(f.read(), tmax)


def xu_formula(weight, n, family):
    """Solve for a cubature formula and return it as a Python dict."""
    return _json.loads(xu_build(weight, n, family))
