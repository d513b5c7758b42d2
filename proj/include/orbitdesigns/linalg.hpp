#pragma once
// Dense exact linear algebra over Scalar: reduced row echelon form, rank,
// kernel bases, and linear solves.  Pivot tests use exact signs for exact
// scalars and the configured tolerance for bigfloats.

#include "orbitdesigns/poly.hpp"

#include <optional>

namespace orbitdesigns {

// Reduce m in place; returns the pivot column of each pivot row.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of {x : m x = 0}; ncols gives the width for an empty row set.
std::vector<Vec> nullspace(Mat m, int ncols);

// One solution of a x = b (free variables set to zero), or nullopt if the
// system is inconsistent.
std::optional<Vec> solve_linear(Mat a, Vec b);

}  // namespace orbitdesigns
