#pragma once
// G-invariant harmonic polynomials: computed canonical bases in every degree,
// the printed closed forms for low degrees, and exact evaluation at corner
// vectors.

#include "orbitdesigns/groups.hpp"
#include "orbitdesigns/linalg.hpp"

namespace orbitdesigns {

// Generating invariants of the coordinate ring with degree <= maxdeg,
// as (degree, polynomial) pairs in ascending degree:
//   A_n : power sums of the n+1 simplex linear forms, degrees 2..n+1;
//   B_n : even power sums sum_i x_i^(2j), degrees 2..2n;
//   D_n : even power sums of degree 2..2n-2 plus x_1*...*x_n of degree n.
const std::vector<std::pair<int, MultiPoly>>& basic_invariants(GroupType type,
                                                               int n, int maxdeg);

// Canonical basis of the G-invariant harmonic polynomials of degree l.  The
// basis is reduced: coefficients of each element's leading monomial in the
// graded order is 1 and does not occur in the other elements.  The size
// always equals the Molien coefficient q_l; a mismatch is a hard error.
const std::vector<MultiPoly>& invariant_harm_basis(const ReflectionGroup& G, int l);

// Group average (1/|G|) sum_g act(g, f).  Throws if |G| exceeds cap.
MultiPoly reynolds(const ReflectionGroup& G, const MultiPoly& f, size_t cap = 1000000);

// Printed closed-form invariants.  Labels by type:
//   A: f3, f4, f5, h4_1..h4_3, h5_1..h5_4, obstruction6
//   B: f4, f6, f8
//   D: f4, f6, f8, f4_2 (n=4), f5 (n=5), f6_2 (n=6)
// Throws for an inapplicable (type, n, label).
MultiPoly closed_form_invariant(GroupType type, int n, const std::string& label);

// Labels applicable at the given degree (empty if none).
std::vector<std::string> closed_form_labels(GroupType type, int n, int degree);

// Closed-form value of the labelled invariant at the corner vector v_k.
// Exact for types B and D; type A values are bigfloat except A_3 f3, whose
// rational values are quoted at the scale of the scaled corner vectors.
Scalar corner_value(GroupType type, int n, int k, const std::string& label);

// Exact evaluation of a homogeneous polynomial at the *unit* corner vector
// v_k, as a sum of rational multiples of square roots of integers.
RadicalSum corner_eval_exact(GroupType type, int n, int k, const MultiPoly& phi);

}  // namespace orbitdesigns
