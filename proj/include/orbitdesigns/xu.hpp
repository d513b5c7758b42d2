#pragma once
// Planar cubature formulas for radially symmetric integrals: circle-orbit
// point sets, the moment/alternating condition system, a seeded nonlinear
// solver, and two independent degree checks (brute-force monomials vs the
// dihedral-invariant reduction).

#include "orbitdesigns/poly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace orbitdesigns {

// Weight W(r) on [0, infinity), known through its radial moments
// mu(j) = int_0^inf r^(2j+1) W(r) dr.
struct RadialWeight {
    std::string name;                  // gaussian | unit_disk | custom
    std::function<Scalar(int)> mu;
    static RadialWeight gaussian();    // mu(j) = j!/2
    static RadialWeight unit_disk();   // mu(j) = 1/(2j+2)
    static RadialWeight custom(std::vector<Scalar> moments);
};

// odd_degree: formulas of degree 2n-1; even_degree: formulas of degree 2n.
enum class XuFamily { odd_degree, even_degree };

XuFamily parse_xu_family(const std::string& s);   // "odd" | "even"
std::string xu_family_name(XuFamily f);

struct XuFormula {
    XuFamily family = XuFamily::odd_degree;
    int n = 0;                       // target parameter (degree 2n-1 or 2n)
    int m = 0;                       // construction parameter
    std::vector<Scalar> lambda;      // one positive coefficient per circle
    std::vector<Scalar> r;           // circle radii
    std::vector<int> sigma;          // 0 if m+i even, 1 if m+i odd
    std::optional<Scalar> lambda0;   // center weight (odd family, odd n only)

    int circles() const { return static_cast<int>(lambda.size()); }
    int angle_count() const;         // points per circle
    bool has_center() const;
    int degree() const;              // 2n-1 (odd family) or 2n (even family)
};

// Fills m and sigma from (family, n) and validates the shape.
XuFormula make_xu_formula(XuFamily family, int n, std::vector<Scalar> lambda,
                          std::vector<Scalar> r,
                          std::optional<Scalar> lambda0 = std::nullopt);

struct XuPoint {
    BigFloat x, y, w;
};

// Explicit weighted point list; per-point weight is 2*pi*lambda_i divided by
// the angle count, plus the center with weight lambda0 when present.
std::vector<XuPoint> build_points(const XuFormula& F);

struct XuConditionRow {
    std::string kind;      // "moment" or "alternating"
    int j = 0;
    bool extra = false;    // the j=0 moment equation the printed list omits
    double residual = 0;   // relative
    bool ok = false;
};

struct XuConditionReport {
    bool pass = false;
    double max_residual = 0;
    bool includes_j0 = true;
    std::vector<XuConditionRow> rows;
};

// Moment equations sum lambda_i r_i^(2j) = mu(j) (j = 0..n-1 for the odd
// family, 0..n for the even family; j=0 is flagged as `extra`) and the
// alternating equations sum (-1)^i lambda_i r_i^p = 0 with p = 2j for the odd
// family (j = floor((n+3)/2)..n-1) and p = 2j+1 for the even family
// (j = floor((n+1)/2)..n-1).
XuConditionReport verify_conditions(const XuFormula& F, const RadialWeight& W);

struct xu_solve_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solves the condition system by damped least squares on (log lambda_i,
// log r_i^2), seeded from the Gauss-quadrature nodes of the measure
// r W(r) dr in s = r^2.  Requires the system to be square (unknowns =
// equations); throws xu_solve_error otherwise and when no positive solution
// with distinct radii is found.
XuFormula solve_moment_system(const RadialWeight& W, int n, XuFamily family);

struct XuDegreeRow {
    bool invariant = false;     // false: monomial x^a y^b; true: u^p v^q
    int a = 0, b = 0;           // exponents (monomial or invariant pair)
    double residual = 0;
    bool ok = false;
};

struct XuDegreeReport {
    bool pass = false;
    double max_residual_monomial = 0;
    double max_residual_invariant = 0;
    int monomial_count = 0;
    int invariant_count = 0;
    std::vector<XuDegreeRow> failures;
};

// Checks exactness up to degree t twice: (a) every monomial x^a y^b against
// the closed-form integral mu((a+b)/2) * angular factor, and (b) only the
// dihedral invariants u^p v^q with u = r^2, v = r^l cos(l theta), l = angle
// count.  The two verdicts must agree; disagreement throws.
XuDegreeReport verify_degree(const XuFormula& F, const RadialWeight& W, int t);

struct DihedralExpansion {
    int ell = 0;
    // (p, q) -> coefficient of u^p v^q
    std::map<std::pair<int, int>, Rational> coeff;
};

// Writes a D_ell-invariant bivariate polynomial in the invariants
// u = x^2 + y^2 and v = Re((x+iy)^ell); throws if f is not invariant.
DihedralExpansion dihedral_reduce(const MultiPoly& f, int ell);

// Inverse substitution; dihedral_reconstruct(dihedral_reduce(f)) == f.
MultiPoly dihedral_reconstruct(const DihedralExpansion& e);

std::string xu_formula_to_json_text(const XuFormula& F);
XuFormula xu_formula_from_json_text(const std::string& text);

}  // namespace orbitdesigns
