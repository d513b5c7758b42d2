#pragma once
// Arithmetic substrate: exact rationals, a single quadratic extension
// Q(sqrt(d)), arbitrary-precision floats, and sums of rational multiples of
// square roots (used when several incompatible radicals meet in one value).
//
// Scalar is a tagged union of the three numeric kinds.  Arithmetic between a
// rational and a quadratic value promotes to the quadratic; arithmetic
// between two *different* quadratic extensions is an error rather than a
// silent promotion.  Anything combined with a bigfloat becomes a bigfloat.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace orbitdesigns {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::mpfr_float;

struct scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mpq_rational's two-argument constructor treats a negative denominator as
// unsigned; ratios with computed denominators must be built through here.
inline Rational ratio(long long num, long long den) {
    if (den == 0) throw scalar_error("ratio: zero denominator");
    Rational r(num);
    r /= den;
    return r;
}

// Global numeric configuration: working precision for bigfloat values and the
// zero-test tolerance 2^(-tolerance_exponent).  Defaults: 256 bits, exponent
// precision/2 = 128.
class Config {
  public:
    static unsigned precision_bits();
    static void set_precision_bits(unsigned bits);   // clamped to >= 64
    static int tolerance_exponent();
    static void set_tolerance_exponent(int e);
    static BigFloat tolerance();                     // 2^(-tolerance_exponent)
    static unsigned orbit_rank_cap();
    static void set_orbit_rank_cap(unsigned cap);    // clamped to >= 2
    // Force initialization (sets the mpfr default precision).
    static void ensure();

  private:
    Config();
    static Config& instance();
    unsigned bits_;
    int tol_exp_;
    unsigned rank_cap_;
};

// m = f^2 * d with d squarefree; returns d and stores f.  m must be >= 1.
long long squarefree_part(long long m, long long* square_factor = nullptr);

class Scalar {
  public:
    enum class Kind { rational, quadratic, bigfloat };

    Scalar() : kind_(Kind::rational), a_(0), b_(0), d_(0) {}
    Scalar(int v) : kind_(Kind::rational), a_(v), b_(0), d_(0) {}
    Scalar(long v) : kind_(Kind::rational), a_(v), b_(0), d_(0) {}
    Scalar(long long v) : kind_(Kind::rational), a_(v), b_(0), d_(0) {}
    Scalar(const Rational& v) : kind_(Kind::rational), a_(v), b_(0), d_(0) {}
    // a + b*sqrt(d); d > 0 is reduced to its squarefree part.
    Scalar(const Rational& a, const Rational& b, long long d);
    explicit Scalar(const BigFloat& v);

    // Exact square root of a nonnegative integer.
    static Scalar sqrt_int(long long d);
    // Parse "p/q", "a+b*sqrt(d)" style exact strings or a decimal literal.
    static Scalar parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ != Kind::bigfloat; }
    bool is_rational_kind() const { return kind_ == Kind::rational; }
    const Rational& quad_a() const { return a_; }
    const Rational& quad_b() const { return b_; }
    long long quad_d() const { return d_; }
    const BigFloat& big() const;
    const Rational& rational() const;   // throws unless rational kind

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    // Exact comparison for exact kinds; numeric comparison once bigfloats are
    // involved.  Mixing two distinct quadratic extensions throws.
    int cmp(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return cmp(o) == 0; }
    bool operator!=(const Scalar& o) const { return cmp(o) != 0; }
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }
    bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
    bool operator>(const Scalar& o) const { return cmp(o) > 0; }
    bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }

    int sign() const;                  // exact for exact kinds
    bool is_zero() const;              // exact kinds: exact; bigfloat: |v| < tol
    bool is_zero(const BigFloat& tol) const;
    Scalar pow(long e) const;          // negative e inverts first
    std::optional<Scalar> try_sqrt() const;  // exact root if representable
    Scalar sqrt() const;               // exact if possible, else bigfloat
    Scalar inverse() const;

    BigFloat to_bigfloat() const;
    // "27/25", "1+2*sqrt(5)", or a 30-digit decimal for bigfloats.
    std::string str() const;

  private:
    void normalize();
    Kind kind_;
    Rational a_, b_;   // rational: value in a_; quadratic: a_ + b_*sqrt(d_)
    long long d_;      // squarefree positive for quadratic kind, else 0
    BigFloat f_;       // bigfloat kind only
};

Scalar abs(const Scalar& x);

// Sum of rational multiples of sqrt(m) over distinct squarefree m >= 1.
// Closed under + and *; zero test is exact (the sqrt(m) are linearly
// independent over Q).  Used for odd-degree corner values where several
// incompatible radicals meet.
class RadicalSum {
  public:
    RadicalSum() = default;
    RadicalSum(const Rational& q);
    // From an exact Scalar (rational or quadratic kind).
    explicit RadicalSum(const Scalar& s);
    // sqrt of a nonnegative rational.
    static RadicalSum sqrt_of(const Rational& q);

    RadicalSum& operator+=(const RadicalSum& o);
    RadicalSum& operator-=(const RadicalSum& o);
    RadicalSum& operator*=(const RadicalSum& o);
    friend RadicalSum operator+(RadicalSum x, const RadicalSum& y) { return x += y; }
    friend RadicalSum operator-(RadicalSum x, const RadicalSum& y) { return x -= y; }
    friend RadicalSum operator*(RadicalSum x, const RadicalSum& y) { return x *= y; }

    bool is_zero() const { return parts_.empty(); }
    bool operator==(const RadicalSum& o) const { return parts_ == o.parts_; }
    // If the sum is a single term c*sqrt(m) with m in {1, d}, view as Scalar.
    std::optional<Scalar> to_scalar() const;
    BigFloat to_bigfloat() const;
    std::string str() const;
    const std::map<long long, Rational>& parts() const { return parts_; }

  private:
    std::map<long long, Rational> parts_;   // squarefree m -> coefficient
    void trim(long long m);
};

}  // namespace orbitdesigns
