#include "orbitdesigns/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace orbitdesigns {

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

Config::Config() : bits_(256), tol_exp_(128), rank_cap_(10) {
    BigFloat::default_precision(static_cast<unsigned>(bits_ * 0.30103) + 2);
}

Config& Config::instance() {
    static Config c;
    return c;
}

void Config::ensure() { instance(); }

unsigned Config::precision_bits() { return instance().bits_; }

void Config::set_precision_bits(unsigned bits) {
    if (bits < 64) bits = 64;
    instance().bits_ = bits;
    instance().tol_exp_ = static_cast<int>(bits / 2);
    BigFloat::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

int Config::tolerance_exponent() { return instance().tol_exp_; }

void Config::set_tolerance_exponent(int e) { instance().tol_exp_ = e; }

BigFloat Config::tolerance() {
    ensure();
    BigFloat t(1);
    t = boost::multiprecision::ldexp(t, -tolerance_exponent());
    return t;
}

unsigned Config::orbit_rank_cap() { return instance().rank_cap_; }

void Config::set_orbit_rank_cap(unsigned cap) {
    if (cap < 2) cap = 2;
    instance().rank_cap_ = cap;
}

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

long long squarefree_part(long long m, long long* square_factor) {
    if (m < 1) throw scalar_error("squarefree_part: argument must be >= 1");
    long long d = 1, f = 1;
    for (long long p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (int i = 0; i + 1 < e; i += 2) f *= p;
        if (e % 2) d *= p;
    }
    d *= m;   // leftover prime (exponent 1)
    if (square_factor) *square_factor = f;
    return d;
}

namespace {

// Exact square root of a nonnegative rational, if it exists.
std::optional<Rational> rat_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    Integer rn = boost::multiprecision::sqrt(num);
    Integer rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

bool fits_ll(const Integer& v) {
    static const Integer lim = (Integer(1) << 62);
    return v >= 0 && v < lim;
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar::Scalar(const Rational& a, const Rational& b, long long d)
    : kind_(Kind::quadratic), a_(a), b_(b), d_(d) {
    if (d <= 0) throw scalar_error("Scalar: quadratic radicand must be positive");
    normalize();
}

Scalar::Scalar(const BigFloat& v) : kind_(Kind::bigfloat), a_(0), b_(0), d_(0) {
    Config::ensure();
    f_ = v;
}

void Scalar::normalize() {
    if (kind_ != Kind::quadratic) return;
    if (b_ == 0) { kind_ = Kind::rational; d_ = 0; return; }
    long long f = 1;
    long long d = squarefree_part(d_, &f);
    if (f != 1) { b_ *= f; d_ = d; }
    if (d_ == 1) { a_ += b_; b_ = 0; kind_ = Kind::rational; d_ = 0; }
}

Scalar Scalar::sqrt_int(long long d) {
    if (d < 0) throw scalar_error("sqrt_int: negative argument");
    if (d == 0) return Scalar(0);
    return Scalar(Rational(0), Rational(1), d);
}

const BigFloat& Scalar::big() const {
    if (kind_ != Kind::bigfloat) throw scalar_error("Scalar: not a bigfloat");
    return f_;
}

const Rational& Scalar::rational() const {
    if (kind_ != Kind::rational) throw scalar_error("Scalar: not a rational");
    return a_;
}

BigFloat Scalar::to_bigfloat() const {
    Config::ensure();
    switch (kind_) {
        case Kind::rational: return static_cast<BigFloat>(a_);
        case Kind::quadratic:
            return static_cast<BigFloat>(a_) +
                   static_cast<BigFloat>(b_) *
                       boost::multiprecision::sqrt(BigFloat(d_));
        default: return f_;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (kind_) {
        case Kind::rational: r.a_ = -r.a_; break;
        case Kind::quadratic: r.a_ = -r.a_; r.b_ = -r.b_; break;
        default: r.f_ = -r.f_; break;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (kind_ == Kind::bigfloat || o.kind_ == Kind::bigfloat) {
        *this = Scalar(to_bigfloat() + o.to_bigfloat());
        return *this;
    }
    if (kind_ == Kind::rational && o.kind_ == Kind::rational) {
        a_ += o.a_;
        return *this;
    }
    long long d = (kind_ == Kind::quadratic) ? d_ : o.d_;
    if (kind_ == Kind::quadratic && o.kind_ == Kind::quadratic && d_ != o.d_)
        throw scalar_error("Scalar: mixing sqrt(" + std::to_string(d_) +
                           ") with sqrt(" + std::to_string(o.d_) + ")");
    a_ += o.a_;
    b_ += o.b_;
    kind_ = Kind::quadratic;
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (kind_ == Kind::bigfloat || o.kind_ == Kind::bigfloat) {
        *this = Scalar(to_bigfloat() * o.to_bigfloat());
        return *this;
    }
    if (kind_ == Kind::rational && o.kind_ == Kind::rational) {
        a_ *= o.a_;
        return *this;
    }
    long long d = (kind_ == Kind::quadratic) ? d_ : o.d_;
    if (kind_ == Kind::quadratic && o.kind_ == Kind::quadratic && d_ != o.d_)
        throw scalar_error("Scalar: mixing sqrt(" + std::to_string(d_) +
                           ") with sqrt(" + std::to_string(o.d_) + ")");
    // (a1 + b1 s)(a2 + b2 s) with s^2 = d
    Rational a2 = o.a_;
    Rational b2 = o.kind_ == Kind::quadratic ? o.b_ : Rational(0);
    Rational na = a_ * a2 + b_ * b2 * d;
    Rational nb = a_ * b2 + b_ * a2;
    a_ = na;
    b_ = nb;
    kind_ = Kind::quadratic;
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    switch (kind_) {
        case Kind::rational:
            if (a_ == 0) throw scalar_error("Scalar: division by zero");
            return Scalar(Rational(1) / a_);
        case Kind::quadratic: {
            Rational nrm = a_ * a_ - b_ * b_ * d_;
            if (nrm == 0) throw scalar_error("Scalar: division by zero");
            return Scalar(a_ / nrm, -b_ / nrm, d_);
        }
        default: {
            if (f_ == 0) throw scalar_error("Scalar: division by zero");
            return Scalar(BigFloat(1 / f_));
        }
    }
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

int Scalar::sign() const {
    switch (kind_) {
        case Kind::rational: return a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        case Kind::quadratic: {
            int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
            int sb = b_ == 0 ? 0 : (b_ > 0 ? 1 : -1);
            if (sa == 0) return sb;
            if (sb == 0) return sa;
            if (sa == sb) return sa;
            // opposite signs: compare a^2 with b^2 d
            Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
            if (lhs == rhs) return 0;
            return (lhs > rhs) ? sa : sb;
        }
        default: return f_ == 0 ? 0 : (f_ > 0 ? 1 : -1);
    }
}

int Scalar::cmp(const Scalar& o) const {
    if (kind_ == Kind::bigfloat || o.kind_ == Kind::bigfloat) {
        BigFloat x = to_bigfloat(), y = o.to_bigfloat();
        return x == y ? 0 : (x < y ? -1 : 1);
    }
    Scalar diff = *this - o;
    return diff.sign();
}

bool Scalar::is_zero() const {
    if (kind_ == Kind::bigfloat) return is_zero(Config::tolerance());
    return sign() == 0;
}

bool Scalar::is_zero(const BigFloat& tol) const {
    if (kind_ != Kind::bigfloat) return sign() == 0;
    return boost::multiprecision::abs(f_) < tol;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, result(1);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::optional<Scalar> Scalar::try_sqrt() const {
    switch (kind_) {
        case Kind::rational: {
            if (a_ < 0) return std::nullopt;
            if (a_ == 0) return Scalar(0);
            if (auto r = rat_sqrt_exact(a_)) return Scalar(*r);
            Integer num = boost::multiprecision::numerator(a_);
            Integer den = boost::multiprecision::denominator(a_);
            Integer nd = num * den;
            if (!fits_ll(nd)) return std::nullopt;
            long long f = 1;
            long long d = squarefree_part(static_cast<long long>(nd), &f);
            return Scalar(Rational(0), Rational(f) / Rational(den), d);
        }
        case Kind::quadratic: {
            // (u + v sqrt(d))^2 = a + b sqrt(d): u^2 is a root of
            // t^2 - a t + b^2 d / 4 = 0.
            if (sign() < 0) return std::nullopt;
            Rational disc = a_ * a_ - b_ * b_ * d_;
            auto rd = rat_sqrt_exact(disc);
            if (!rd) return std::nullopt;
            for (int branch = 0; branch < 2; ++branch) {
                Rational t = (a_ + (branch ? -*rd : *rd)) / 2;
                auto u = rat_sqrt_exact(t);
                if (!u || *u == 0) continue;
                Rational v = b_ / (2 * *u);
                Scalar cand(*u, v, d_);
                if (cand * cand == *this && cand.sign() >= 0) return cand;
            }
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

Scalar Scalar::sqrt() const {
    if (auto e = try_sqrt()) return *e;
    if (sign() < 0) throw scalar_error("Scalar: sqrt of negative value");
    return Scalar(boost::multiprecision::sqrt(to_bigfloat()));
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

// ---------------------------------------------------------------------------
// Printing and parsing
// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Print c * sqrt(d) without the leading sign of c.
std::string sqrt_term(const Rational& c, long long d) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (ac == 1) return "sqrt(" + std::to_string(d) + ")";
    return rat_str(ac) + "*sqrt(" + std::to_string(d) + ")";
}

}  // namespace

std::string Scalar::str() const {
    switch (kind_) {
        case Kind::rational: return rat_str(a_);
        case Kind::quadratic: {
            std::string s;
            if (a_ != 0) {
                s = rat_str(a_);
                s += (b_ > 0) ? "+" : "-";
            } else if (b_ < 0) {
                s = "-";
            }
            s += sqrt_term(b_, d_);
            return s;
        }
        default: return f_.str(30);
    }
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw scalar_error("Scalar::parse: empty string");

    if (s.find("sqrt") == std::string::npos) {
        // Rational "p/q" or integer, else a decimal literal.
        if (s.find('.') == std::string::npos &&
            s.find('e') == std::string::npos &&
            s.find('E') == std::string::npos) {
            try {
                return Scalar(Rational(s));
            } catch (const std::exception&) {
                throw scalar_error("Scalar::parse: bad rational '" + text + "'");
            }
        }
        Config::ensure();
        try {
            return Scalar(BigFloat(s));
        } catch (const std::exception&) {
            throw scalar_error("Scalar::parse: bad number '" + text + "'");
        }
    }

    // Sum of terms [+|-] [coef *] [sqrt(d)]
    Scalar total(0);
    size_t i = 0;
    while (i < s.size()) {
        int sgn = 1;
        if (s[i] == '+') ++i;
        else if (s[i] == '-') { sgn = -1; ++i; }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.empty()) throw scalar_error("Scalar::parse: bad term in '" + text + "'");
        Rational coef(1);
        long long d = 1;
        size_t k = term.find("sqrt(");
        if (k == std::string::npos) {
            coef = Rational(term);
        } else {
            size_t close = term.find(')', k);
            if (close == std::string::npos)
                throw scalar_error("Scalar::parse: unbalanced sqrt in '" + text + "'");
            d = std::stoll(term.substr(k + 5, close - k - 5));
            std::string pre = term.substr(0, k);
            if (!pre.empty() && pre.back() == '*') pre.pop_back();
            if (!pre.empty()) coef = Rational(pre);
        }
        if (sgn < 0) coef = -coef;
        total += (d == 1) ? Scalar(coef) : Scalar(Rational(0), coef, d);
    }
    return total;
}

// ---------------------------------------------------------------------------
// RadicalSum
// ---------------------------------------------------------------------------

RadicalSum::RadicalSum(const Rational& q) {
    if (q != 0) parts_[1] = q;
}

RadicalSum::RadicalSum(const Scalar& s) {
    switch (s.kind()) {
        case Scalar::Kind::rational:
            if (s.quad_a() != 0) parts_[1] = s.quad_a();
            break;
        case Scalar::Kind::quadratic:
            if (s.quad_a() != 0) parts_[1] = s.quad_a();
            if (s.quad_b() != 0) parts_[s.quad_d()] = s.quad_b();
            break;
        default:
            throw scalar_error("RadicalSum: bigfloat input not representable");
    }
}

RadicalSum RadicalSum::sqrt_of(const Rational& q) {
    if (q < 0) throw scalar_error("RadicalSum: sqrt of negative rational");
    RadicalSum r;
    if (q == 0) return r;
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    Integer nd = num * den;
    if (!fits_ll(nd)) throw scalar_error("RadicalSum: radicand too large to factor");
    long long f = 1;
    long long d = squarefree_part(static_cast<long long>(nd), &f);
    r.parts_[d] = Rational(f) / Rational(den);
    return r;
}

void RadicalSum::trim(long long m) {
    auto it = parts_.find(m);
    if (it != parts_.end() && it->second == 0) parts_.erase(it);
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
    for (const auto& [m, c] : o.parts_) {
        parts_[m] += c;
        trim(m);
    }
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) {
    for (const auto& [m, c] : o.parts_) {
        parts_[m] -= c;
        trim(m);
    }
    return *this;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& o) {
    std::map<long long, Rational> out;
    for (const auto& [m1, c1] : parts_) {
        for (const auto& [m2, c2] : o.parts_) {
            // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)) with g = gcd(m1, m2)
            long long g = std::gcd(m1, m2);
            long long m3 = (m1 / g) * (m2 / g);
            Rational add = c1 * c2 * g;
            auto [it, fresh] = out.try_emplace(m3, add);
            if (!fresh) it->second += add;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    parts_ = std::move(out);
    return *this;
}

std::optional<Scalar> RadicalSum::to_scalar() const {
    Rational a(0), b(0);
    long long d = 0;
    for (const auto& [m, c] : parts_) {
        if (m == 1) { a = c; continue; }
        if (d != 0) return std::nullopt;
        d = m;
        b = c;
    }
    if (d == 0) return Scalar(a);
    return Scalar(a, b, d);
}

BigFloat RadicalSum::to_bigfloat() const {
    Config::ensure();
    BigFloat v(0);
    for (const auto& [m, c] : parts_)
        v += static_cast<BigFloat>(c) * boost::multiprecision::sqrt(BigFloat(m));
    return v;
}

std::string RadicalSum::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : parts_) {
        if (first) {
            if (m == 1) s = rat_str(c);
            else s = (c < 0 ? "-" : "") + sqrt_term(c, m);
            first = false;
            continue;
        }
        s += (c < 0) ? "-" : "+";
        if (m == 1) s += rat_str(c < 0 ? Rational(-c) : c);
        else s += sqrt_term(c, m);
    }
    return s;
}

}  // namespace orbitdesigns
