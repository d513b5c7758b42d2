"""End-to-end smoke tests for the Python bindings and the CLI tool."""

import json
import os
import subprocess

import pytest

import orbit_designs as od


def test_molien_b2():
    assert od.molien("B", 2, 8) == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_molien_matches_basis_counts():
    for type_, rank in [("A", 3), ("B", 3), ("D", 4)]:
        dims = od.molien(type_, rank, 6)
        for l, q in enumerate(dims):
            assert len(od.harm_basis(type_, rank, l)) == q


def test_group_data():
    assert od.group_order("B", 3) == 48
    assert od.exponents("D", 4) == [1, 3, 3, 5]


def test_orbit_b3_corner2():
    o = od.orbit("B", 3, 2)
    assert o["size"] == 12
    assert o["norm2"] == "2"
    assert ["1", "1", "0"] in o["points"]
    assert od.orbit_size("B", 3, 2) == 12


def test_fisher_values():
    assert od.fisher(3, 5, spheres=2) == 14
    assert od.fisher(2, 5, spheres=2) == 8
    assert od.fisher(3, 7, spheres=3, origin=False) == 26


def test_strength_of_orbit_design():
    design = {
        "type": "B",
        "rank": 2,
        "J": [1, 2],
        "radii": {"1": "1", "2": "2"},
        "weights": {"1": "1", "2": "1/16"},
    }
    rep = od.strength(json.dumps(design), tmax=6)
    assert rep["full"] == rep["direct"] == rep["invariant"] == 5
    assert rep["agree"] is True
    assert rep["tight"] is True and rep["bound"] == 8


def test_classify_b2():
    rows = od.classify("B", 2, tmax=7)
    keys = {(r["t"], tuple(r["J"])) for r in rows}
    assert keys == {(3, (1,)), (3, (2,)), (5, (1, 2)), (7, (1, 2))}


def test_xu_round_trip():
    text = od.xu_build("gaussian", 2, "odd")
    formula = json.loads(text)
    assert formula["family"] == "odd" and formula["n"] == 2
    report = od.xu_verify(text, weight="gaussian")
    assert report["pass"] is True
    assert report["conditions_max_residual"] < 1e-12


def test_run_cli_in_process():
    code, out, err = od.run(["molien", "--type", "B", "--rank", "2", "--lmax", "8"])
    assert code == 0 and err == ""
    assert out.splitlines()[0] == "(1,0,0,0,1,0,0,0,1)"
    code, _, _ = od.run(["check-design", "missing.json"])
    assert code == 2


@pytest.mark.skipif("ORBIT_DESIGNS_CLI" not in os.environ,
                    reason="CLI binary path not provided")
def test_cli_binary_matches_module():
    cli = os.environ["ORBIT_DESIGNS_CLI"]
    proc = subprocess.run(
        [cli, "--format", "json", "molien", "--type", "D", "--rank", "4", "--lmax", "8"],
        capture_output=True, text=True, check=True)
    _, out, _ = od.run(["--format", "json", "molien", "--type", "D", "--rank", "4",
                        "--lmax", "8"])
    assert proc.stdout == out
    assert json.loads(out)["coefficients"] == [1, 0, 0, 0, 2, 0, 1, 0, 3]
