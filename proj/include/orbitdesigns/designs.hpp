#pragma once
// Euclidean design strength certification (three independent methods),
// Fisher-type bounds, tightness, the classification search over corner-vector
// orbits, and the sign obstructions ruling out higher strengths.

#include "orbitdesigns/invariants.hpp"

#include <map>
#include <optional>

namespace orbitdesigns {

struct Shell {
    Scalar radius;                 // > 0
    Scalar radius2;                // radius^2, exact whenever radius is
    std::vector<Vec> points;       // actual scale (radius * unit direction)
    std::vector<Scalar> weights;   // per point, all > 0
    int corner_k = 0;              // > 0 when the shell is a corner orbit
    Scalar total_weight() const;
    bool constant_weight() const;
};

struct WeightedDesign {
    int n = 0;
    bool orbit_based = false;      // true when built from corner orbits
    GroupType type = GroupType::A;
    int rank = 0;
    std::vector<int> J;            // corner indices when orbit_based
    std::vector<Shell> shells;
    bool contains_origin = false;
    Scalar origin_weight = Scalar(0);
    size_t size() const;           // total number of points incl. origin
    int distinct_radii() const;    // p' = number of distinct nonzero radii
};

// Union of the corner orbits v_k^G for k in J, each rescaled to radius
// radii.at(k) with constant weight weights.at(k).
WeightedDesign make_orbit_design(GroupType type, int n, const std::vector<int>& J,
                                 const std::map<int, Scalar>& radii,
                                 const std::map<int, Scalar>& weights);

// Arbitrary weighted point set; shells are formed by grouping equal norms
// (exactly for exact coordinates, within tolerance otherwise).
WeightedDesign make_explicit_design(const std::vector<Vec>& points,
                                    const std::vector<Scalar>& weights);

struct Residual {
    int l = 0, j = 0;
    Scalar value;          // exact when the arithmetic stayed exact
    bool exact = true;
    bool zero = true;
};

struct StrengthReport {
    int t_certified = 0;
    std::string method;    // invariant | full_harmonic | direct_integration
    std::vector<Residual> residuals;
};

// Certification via G-invariant harmonic polynomials only: residuals
// sum_k w_k r_k^(2j+l) N_k phi(v_k) for every phi in the invariant basis,
// 1 <= l <= t_max, 0 <= j <= (t_max-l)/2.  Requires every shell to be a
// single G-orbit with constant weight.
StrengthReport strength_invariant(const WeightedDesign& X, const ReflectionGroup& G,
                                  int t_max);

// Oracle: the same conditions over the full harmonic basis, evaluated point
// by point.
StrengthReport strength_full(const WeightedDesign& X, int t_max);

// Second oracle: the defining cubature equality on every monomial of degree
// <= t_max, using the closed-form sphere moments.
StrengthReport strength_direct(const WeightedDesign& X, int t_max);

enum class Parity { even, odd };

// dim P_l(S) and dim P*_l(S) for a union S of p concentric spheres with
// eps = 1 when one of them is {0}.
long long dim_P(int n, int l, int p, int eps);
long long dim_Pstar(int n, int l, int p, int eps);

// Lower bound on |X| for a Euclidean t-design: t = 2e (parity even) gives
// dim P_e(S); t = 2e-1 (parity odd) gives 2 dim P*_{e-1}(S), minus 1 exactly
// when e is odd and the origin lies in X.
long long fisher_bound(int n, int e, Parity parity, int p, bool eps_S,
                       bool origin_in_X);

struct TightnessReport {
    long long size = 0;
    long long bound = 0;
    long long slack = 0;
    bool tight = false;
};
TightnessReport is_tight(const WeightedDesign& X, int t);

// Sign table of the obstruction sums sum_{x in v_k^G} f(x) (unit scale):
// type A uses the degree-6 harmonic witness and the sums are negative for
// every k; types B and D use f8 > 0 at every corner.  A sign violation is a
// hard error.
struct ObstructionRow {
    int k = 0;
    Scalar value;      // exact
    int sign = 0;
};
std::vector<ObstructionRow> nonexistence_obstruction(GroupType type, int n);

// One record per tight design found: a fixed solution (one assignment) or a
// one-parameter family (three exactly confirmed samples of the free radius).
struct ClassifiedDesign {
    GroupType type = GroupType::A;
    int n = 0;
    int t = 0;
    std::vector<int> J;
    std::vector<int> cls;          // radius-class index per J entry (0-based)
    bool family = false;
    int free_class = -1;           // class whose radius is free (family only)
    struct Assignment {
        std::map<int, Scalar> radius2;
        std::map<int, Scalar> weight;
    };
    std::vector<Assignment> samples;  // one entry, or three for a family
    long long cardinality = 0;
    long long bound = 0;
    bool resolved = true;          // false: numeric solution not rationalized
};

// Exhaustive search over J subsets, strengths t <= t_max and radius-class
// partitions, pruned by the Fisher-type cardinality identity; radii/weights
// from exact kernels at rational radii plus Gauss-Newton for isolated radii
// with exact confirmation.
std::vector<ClassifiedDesign> classify_corner_designs(GroupType type, int n_max,
                                                      int t_max);

// Materialize a classification record as a concrete design (families: pick
// one of the confirmed samples).
WeightedDesign design_from_classified(const ClassifiedDesign& row, size_t sample = 0);

// Normalized unit-sphere moment of the monomial x^a: zero unless every
// exponent is even, else prod (a_i-1)!! / (n(n+2)...(n+|a|-2)).
Rational sphere_moment(int n, const Expo& a);

}  // namespace orbitdesigns
