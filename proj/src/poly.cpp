#include "orbitdesigns/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orbitdesigns {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---------------------------------------------------------------------------
// MultiPoly basics
// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(int n, const Scalar& c) {
    MultiPoly p(n);
    p.add_term(Expo(n, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(const Expo& e, const Scalar& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
    Expo e(n, 0);
    e.at(i) = 1;
    return monomial(e);
}

MultiPoly MultiPoly::radius2(int n) {
    MultiPoly p(n);
    for (int i = 0; i < n; ++i) {
        Expo e(n, 0);
        e[i] = 2;
        p.add_term(e, Scalar(1));
    }
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return expo_degree(terms_.begin()->first);   // order puts top degree first
}

bool MultiPoly::homogeneous() const {
    if (terms_.empty()) return true;
    int d = expo_degree(terms_.begin()->first);
    return expo_degree(terms_.rbegin()->first) == d;
}

const Scalar& MultiPoly::coeff(const Expo& e) const {
    static const Scalar zero(0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void MultiPoly::add_term(const Expo& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != n_)
        throw scalar_error("MultiPoly: exponent vector length mismatch");
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) it->second += c;
    if (it->second.is_exact() && it->second.sign() == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_ != o.n_) throw scalar_error("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (n_ != o.n_) throw scalar_error("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_ != o.n_) throw scalar_error("MultiPoly: variable count mismatch");
    MultiPoly r(n_);
    Expo e(n_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(n_);
    if (c.is_exact() && c.sign() == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw scalar_error("MultiPoly: negative power");
    MultiPoly r = constant(n_, Scalar(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        if ((e >>= 1)) base *= base;
    }
    return r;
}

int MultiPoly::compare(const MultiPoly& o) const {
    if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
    auto it = terms_.begin(), jt = o.terms_.begin();
    MonoOrder before;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first)
            return before(it->first, jt->first) ? -1 : 1;
        int c = it->second.cmp(jt->second);
        if (c != 0) return c;
    }
    if (it != terms_.end()) return 1;
    if (jt != o.terms_.end()) return -1;
    return 0;
}

Scalar MultiPoly::evaluate(const Vec& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw scalar_error("MultiPoly::evaluate: point dimension mismatch");
    // Power tables per coordinate up to the needed exponent.
    std::vector<std::vector<Scalar>> pw(n_);
    std::vector<int> maxe(n_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < n_; ++i) maxe[i] = std::max(maxe[i], e[i]);
    for (int i = 0; i < n_; ++i) {
        pw[i].reserve(maxe[i] + 1);
        pw[i].push_back(Scalar(1));
        for (int k = 1; k <= maxe[i]; ++k) pw[i].push_back(pw[i].back() * x[i]);
    }
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
        Scalar v = c;
        for (int i = 0; i < n_; ++i)
            if (e[i]) v *= pw[i][e[i]];
        total += v;
    }
    return total;
}

void MultiPoly::prune(const BigFloat& tol) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero(tol) ? terms_.erase(it) : std::next(it);
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs;
        bool neg = false;
        bool wrap = false;
        if (c.kind() == Scalar::Kind::rational) {
            Rational q = c.rational();
            neg = q < 0;
            Rational aq = neg ? Rational(-q) : q;
            cs = Scalar(aq).str();
        } else if (c.kind() == Scalar::Kind::bigfloat) {
            neg = c.sign() < 0;
            cs = (neg ? (-c) : c).str();
        } else {
            cs = c.str();
            wrap = true;
        }
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += ' ';
            mono += 'x' + std::to_string(i + 1);
            if (e[i] > 1) mono += '^' + std::to_string(e[i]);
        }
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (wrap) cs = '(' + cs + ')';
        if (mono.empty()) {
            os << cs;
        } else if (cs == "1" && !wrap) {
            os << mono;
        } else {
            os << cs << " * " << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Matrix utilities
// ---------------------------------------------------------------------------

Mat mat_identity(int n) {
    Mat m(n, Vec(n, Scalar(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b.at(0).size());
    Mat r(n, Vec(m, Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t].is_exact() && a[i][t].sign() == 0) continue;
            for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Mat mat_transpose(const Mat& a) {
    int n = static_cast<int>(a.size());
    int m = static_cast<int>(a.at(0).size());
    Mat r(m, Vec(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_is_orthogonal(const Mat& g) {
    int n = static_cast<int>(g.size());
    for (const auto& row : g)
        if (static_cast<int>(row.size()) != n) return false;
    Mat p = mat_mul(mat_transpose(g), g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar want(i == j ? 1 : 0);
            Scalar diff = p[i][j] - want;
            if (!diff.is_zero()) return false;
        }
    return true;
}

Vec mat_apply(const Mat& g, const Vec& x) {
    int n = static_cast<int>(g.size());
    Vec y(n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(x.size()); ++j) {
            if (g[i][j].is_exact() && g[i][j].sign() == 0) continue;
            y[i] += g[i][j] * x[j];
        }
    return y;
}

Scalar dot(const Vec& x, const Vec& y) {
    Scalar s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// ---------------------------------------------------------------------------
// act / sym / laplacian / harm_basis
// ---------------------------------------------------------------------------

MultiPoly act(const Mat& g, const MultiPoly& f) {
    int n = f.nvars();
    if (static_cast<int>(g.size()) != n)
        throw scalar_error("act: matrix size does not match variable count");
    if (!mat_is_orthogonal(g))
        throw scalar_error("act: matrix is not orthogonal");
    // Substitute x_i <- (g^T x)_i = sum_j g[j][i] x_j  (f composed with g^{-1}).
    std::vector<MultiPoly> lin;
    lin.reserve(n);
    for (int i = 0; i < n; ++i) {
        MultiPoly li(n);
        for (int j = 0; j < n; ++j) {
            if (g[j][i].is_exact() && g[j][i].sign() == 0) continue;
            Expo e(n, 0);
            e[j] = 1;
            li.add_term(e, g[j][i]);
        }
        lin.push_back(li);
    }
    // Progressive power cache per variable.
    std::vector<std::vector<MultiPoly>> pw(n);
    auto power = [&](int i, int k) -> const MultiPoly& {
        auto& v = pw[i];
        if (v.empty()) v.push_back(MultiPoly::constant(n, Scalar(1)));
        while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * lin[i]);
        return v[k];
    };
    MultiPoly out(n);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (e[i]) term *= power(i, e[i]);
        out += term;
    }
    return out;
}

MultiPoly sym(const MultiPoly& f) {
    if (f.is_zero()) throw scalar_error("sym: zero polynomial");
    int n = f.nvars();
    // Orbit of f under adjacent transpositions, each distinct image once.
    // Images are produced by re-keying exponent vectors, so no matrix action
    // is needed.
    auto swap_vars = [n](const MultiPoly& p, int i) {
        MultiPoly q(n);
        for (const auto& [e, c] : p.terms()) {
            Expo e2 = e;
            std::swap(e2[i], e2[i + 1]);
            q.add_term(e2, c);
        }
        return q;
    };
    std::set<MultiPoly> seen{f};
    std::vector<MultiPoly> frontier{f};
    while (!frontier.empty()) {
        std::vector<MultiPoly> next;
        for (const auto& p : frontier)
            for (int i = 0; i + 1 < n; ++i) {
                MultiPoly q = swap_vars(p, i);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    MultiPoly total(n);
    for (const auto& p : seen) total += p;
    return total;
}

MultiPoly laplacian(const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly out(n);
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < n; ++i) {
            if (e[i] < 2) continue;
            Expo e2 = e;
            e2[i] -= 2;
            out.add_term(e2, c * Scalar(static_cast<long>(e[i]) * (e[i] - 1)));
        }
    return out;
}

namespace {

// All exponent vectors of total degree d in n variables, graded-lex order.
void monomials_rec(int n, int d, Expo& cur, int pos, std::vector<Expo>& out) {
    if (pos == n - 1) {
        cur[pos] = d;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[pos] = k;
        monomials_rec(n, d - k, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Expo> monomials_of_degree(int n, int d) {
    std::vector<Expo> out;
    if (n <= 0) return out;
    Expo cur(n, 0);
    monomials_rec(n, d, cur, 0, out);
    return out;
}

std::vector<MultiPoly> harm_basis(int n, int l) {
    if (n < 1 || l < 0) throw scalar_error("harm_basis: bad arguments");
    std::vector<MultiPoly> basis;
    if (n == 1) {
        // Harm_l(R) is {1, x} and 0 beyond.
        if (l <= 1) {
            Expo e(1, l);
            basis.push_back(MultiPoly::monomial(e));
        }
        return basis;
    }
    // For each seed monomial x'^{a} in the first n-1 variables with |a| = l
    // (slice k0 = 0) or |a| = l-1 (slice k0 = 1), extend to the unique
    // harmonic polynomial sum_k x_n^k g_k with prescribed Cauchy data.
    auto laplace_head = [n](const MultiPoly& p) {
        MultiPoly out(n);
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i < n - 1; ++i) {
                if (e[i] < 2) continue;
                Expo e2 = e;
                e2[i] -= 2;
                out.add_term(e2, c * Scalar(static_cast<long>(e[i]) * (e[i] - 1)));
            }
        return out;
    };
    for (int k0 = 0; k0 <= 1 && k0 <= l; ++k0) {
        for (const auto& head : monomials_of_degree(n - 1, l - k0)) {
            Expo e(n, 0);
            for (int i = 0; i < n - 1; ++i) e[i] = head[i];
            e[n - 1] = k0;
            MultiPoly g = MultiPoly::monomial(e);
            MultiPoly h = g;
            int k = k0;
            while (!g.is_zero() && k + 2 <= l) {
                // g_{k+2} = -D' g_k / ((k+1)(k+2)), carried on x_n^k slices
                // by shifting the x_n exponent.
                MultiPoly dg = laplace_head(g);
                if (dg.is_zero()) break;
                MultiPoly next(n);
                Scalar c = Scalar(-1) / Scalar(static_cast<long>(k + 1) * (k + 2));
                for (const auto& [ee, cc] : dg.terms()) {
                    Expo e2 = ee;
                    e2[n - 1] += 2;
                    next.add_term(e2, cc * c);
                }
                h += next;
                g = next;
                k += 2;
            }
            basis.push_back(h);
        }
    }
    return basis;
}

}  // namespace orbitdesigns
