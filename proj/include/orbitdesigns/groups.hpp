#pragma once
// Reflection groups of types A_n, B_n, D_n acting on R^n: fundamental roots,
// generator matrices, exponents, group order, corner vectors, orbit
// enumeration, and the harmonic Molien dimension series.

#include "orbitdesigns/poly.hpp"

namespace orbitdesigns {

enum class GroupType { A, B, D };

GroupType parse_group_type(const std::string& s);     // "A"/"B"/"D"
std::string group_type_name(GroupType t);
int min_rank(GroupType t);                            // A,B: 2; D: 4

struct ReflectionGroup {
    GroupType type;
    int n = 0;                       // rank = ambient dimension
    std::vector<Vec> roots;          // n fundamental roots, |alpha|^2 = 2
    std::vector<Mat> generators;     // reflections r(alpha_i)
    std::vector<int> exponents;      // ascending
    long long order = 0;
    // Second-smallest exponent m_2 (orbits are spherical m_2-designs).
    int m2() const { return exponents.at(1); }
};

ReflectionGroup build_group(GroupType type, int n);

// Corner vector v_k (1-based k): unit vector orthogonal to every fundamental
// root but alpha_k.  The scaled form has exact coordinates (integers for
// B/D, values in Q(sqrt(n+1)) for A) and is the representative used for all
// exact evaluation; unit = scaled / sqrt(scaled_norm2).
struct CornerVector {
    int k = 0;
    Vec scaled;
    Scalar scaled_norm2;
    Vec unit;            // exact when the norm is expressible, else bigfloat
    bool unit_exact = false;
};

std::vector<CornerVector> corner_vectors(GroupType type, int n);

struct Orbit {
    Vec rep;                         // the seed vector
    std::vector<Vec> points;
    Scalar norm2;                    // common squared norm of the points
    size_t size() const { return points.size(); }
};

// Breadth-first closure of x under the generators with exact deduplication
// (tolerance-bucketed for bigfloat coordinates).  Throws if the closure
// exceeds |G| points, which can only happen under tolerance misconfiguration.
Orbit orbit(const ReflectionGroup& G, const Vec& x);

// Orbit of the scaled corner vector v_k.
Orbit corner_orbit(const ReflectionGroup& G, int k);

// Closed-form orbit size N_k.
long long corner_orbit_size(GroupType type, int n, int k);

// Coefficients q_0..q_lmax of prod_{i=2}^n 1/(1 - x^(1+m_i)), the dimension
// series of the invariant harmonic spaces.
std::vector<long long> molien_dims(const ReflectionGroup& G, int lmax);

// Every element of G as a matrix (breadth-first closure over generators);
// throws once more than cap elements appear.
std::vector<Mat> group_elements(const ReflectionGroup& G, size_t cap = 1000000);

}  // namespace orbitdesigns
