#pragma once
// Sparse multivariate polynomials over Scalar: exponent-vector -> coefficient
// maps in a canonical graded-lexicographic order, with the group action,
// symmetrization, Laplacian, evaluation, and harmonic-basis generation.

#include "orbitdesigns/scalar.hpp"

#include <functional>
#include <vector>

namespace orbitdesigns {

using Expo = std::vector<int>;
using Vec = std::vector<Scalar>;
using Mat = std::vector<std::vector<Scalar>>;

inline int expo_degree(const Expo& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

// Graded lexicographic: higher total degree first; within a degree the
// lexicographically larger exponent vector first (x1-major).  Gives the
// deterministic term order used for printing and basis normalization.
struct MonoOrder {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class MultiPoly {
  public:
    using TermMap = std::map<Expo, Scalar, MonoOrder>;

    explicit MultiPoly(int n = 0) : n_(n) {}
    static MultiPoly constant(int n, const Scalar& c);
    static MultiPoly monomial(const Expo& e, const Scalar& c = Scalar(1));
    static MultiPoly variable(int n, int i);   // x_{i+1}, 0-based i
    // sum_i x_i^2
    static MultiPoly radius2(int n);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;                         // max total degree; -1 if zero
    bool homogeneous() const;
    const TermMap& terms() const { return terms_; }
    const Scalar& coeff(const Expo& e) const;   // zero scalar if absent
    void add_term(const Expo& e, const Scalar& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(int e) const;

    int compare(const MultiPoly& o) const;      // total order for dedup
    bool operator==(const MultiPoly& o) const { return compare(o) == 0; }
    bool operator<(const MultiPoly& o) const { return compare(o) < 0; }

    Scalar evaluate(const Vec& x) const;
    // Remove bigfloat coefficients below tol in absolute value.
    void prune(const BigFloat& tol);
    std::string str() const;

  private:
    int n_;
    TermMap terms_;
};

// (g f)(x) = f(g^{-1} x) for an orthogonal matrix g, so that
// act(g1*g2, f) = act(g1, act(g2, f)).  Throws on a non-orthogonal or
// wrongly-sized matrix.
MultiPoly act(const Mat& g, const MultiPoly& f);

// Orbit-sum of f under coordinate permutations: the sum of the distinct
// permutation images of f, each counted once.
MultiPoly sym(const MultiPoly& f);

MultiPoly laplacian(const MultiPoly& f);

// Basis of Harm_l(R^n), the harmonic subspace of Hom_l(R^n); size
// C(n+l-1, l) - C(n+l-3, l-2).  Each element is indexed by a monomial with
// x_n-exponent <= 1 and is built by the Cauchy-data recursion
// g_{k+2} = -D'g_k / ((k+1)(k+2)) on slices f = sum_k x_n^k g_k(x').
std::vector<MultiPoly> harm_basis(int n, int l);

// All exponent vectors of total degree d in n variables, graded-lex order.
std::vector<Expo> monomials_of_degree(int n, int d);

// Matrix utilities shared by group code and tests.
Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
bool mat_is_orthogonal(const Mat& g);
Vec mat_apply(const Mat& g, const Vec& x);      // g * x
Scalar dot(const Vec& x, const Vec& y);

long long binomial(int n, int k);

}  // namespace orbitdesigns
