#include "orbitdesigns/designs.hpp"

#include "orbitdesigns/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace orbitdesigns {

namespace {

using boost::multiprecision::abs;

// Multiply two scalars even when they live in different quadratic fields;
// the product is exact whenever it collapses to a single radical.
Scalar mul_mixed(const Scalar& x, const Scalar& y) {
    if (!x.is_exact() || !y.is_exact())
        return Scalar(x.to_bigfloat() * y.to_bigfloat());
    if (x.kind() == Scalar::Kind::quadratic && y.kind() == Scalar::Kind::quadratic &&
        x.quad_d() != y.quad_d()) {
        RadicalSum rs(x);
        rs *= RadicalSum(y);
        if (auto s = rs.to_scalar()) return *s;
        return Scalar(rs.to_bigfloat());
    }
    return x * y;
}

Vec vec_scaled(const Vec& v, const Scalar& c) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(mul_mixed(x, c));
    return out;
}

// Equality with exact comparison for exact kinds (two distinct squarefree
// radicands can never be equal) and a relative tolerance otherwise.
bool scalar_eq(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
        if (a.kind() == Scalar::Kind::quadratic &&
            b.kind() == Scalar::Kind::quadratic && a.quad_d() != b.quad_d())
            return false;
        return a == b;
    }
    BigFloat av = a.to_bigfloat(), bv = b.to_bigfloat();
    return abs(av - bv) <= Config::tolerance() * (BigFloat(1) + abs(av));
}

// Residual accumulator: exact radical arithmetic for as long as every term
// is exact, with a magnitude track for the relative zero test otherwise.
struct Accum {
    bool exact = true;
    RadicalSum rs;
    BigFloat bf{0};
    BigFloat mag{0};

    void demote() {
        if (!exact) return;
        bf = rs.to_bigfloat();
        exact = false;
    }
    void add(const RadicalSum& t) {
        BigFloat v = t.to_bigfloat();
        mag += abs(v);
        if (exact)
            rs += t;
        else
            bf += v;
    }
    void sub(const RadicalSum& t) {
        BigFloat v = t.to_bigfloat();
        mag += abs(v);
        if (exact)
            rs -= t;
        else
            bf -= v;
    }
    void add_float(const BigFloat& t) {
        mag += abs(t);
        demote();
        bf += t;
    }
    Residual finish(int l, int j) const {
        Residual r;
        r.l = l;
        r.j = j;
        if (exact) {
            r.exact = true;
            r.zero = rs.is_zero();
            if (auto s = rs.to_scalar())
                r.value = *s;
            else
                r.value = Scalar(rs.to_bigfloat());
        } else {
            r.exact = false;
            BigFloat scale = mag > 1 ? mag : BigFloat(1);
            r.zero = abs(bf) <= Config::tolerance() * scale;
            r.value = Scalar(bf);
        }
        return r;
    }
};

// Memoized monomial evaluation at a fixed point; exact coordinates share a
// quadratic field per point, so powers stay exact.
class PointEval {
public:
    explicit PointEval(const Vec* x) : x_(x) {
        exact_ = true;
        for (const auto& c : *x_)
            if (!c.is_exact()) exact_ = false;
    }
    bool exact() const { return exact_; }

    RadicalSum eval_exact(const MultiPoly& f) {
        RadicalSum acc;
        for (const auto& [e, c] : f.terms()) {
            RadicalSum t(c);
            t *= RadicalSum(mono(e));
            acc += t;
        }
        return acc;
    }
    BigFloat eval_float(const MultiPoly& f) {
        BigFloat acc(0);
        for (const auto& [e, c] : f.terms()) acc += c.to_bigfloat() * mono_f(e);
        return acc;
    }

private:
    Scalar mono(const Expo& e) {
        if (expo_degree(e) == 0) return Scalar(1);
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        Expo parent = e;
        size_t i = 0;
        while (parent[i] == 0) ++i;
        parent[i] -= 1;
        Scalar v = mono(parent) * (*x_)[i];
        memo_.emplace(e, v);
        return v;
    }
    BigFloat mono_f(const Expo& e) {
        if (expo_degree(e) == 0) return BigFloat(1);
        auto it = memo_f_.find(e);
        if (it != memo_f_.end()) return it->second;
        Expo parent = e;
        size_t i = 0;
        while (parent[i] == 0) ++i;
        parent[i] -= 1;
        BigFloat v = mono_f(parent) * (*x_)[i].to_bigfloat();
        memo_f_.emplace(e, v);
        return v;
    }

    const Vec* x_;
    bool exact_ = true;
    std::map<Expo, Scalar, MonoOrder> memo_;
    std::map<Expo, BigFloat, MonoOrder> memo_f_;
};

int strength_from_parity(int t, Parity* parity) {
    int e = (t % 2 == 0) ? t / 2 : (t + 1) / 2;
    *parity = (t % 2 == 0) ? Parity::even : Parity::odd;
    return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightedDesign
// ---------------------------------------------------------------------------

Scalar Shell::total_weight() const {
    Accum acc;
    for (const auto& w : weights) {
        if (w.is_exact())
            acc.add(RadicalSum(w));
        else
            acc.add_float(w.to_bigfloat());
    }
    if (acc.exact) {
        if (auto s = acc.rs.to_scalar()) return *s;
        return Scalar(acc.rs.to_bigfloat());
    }
    return Scalar(acc.bf);
}

bool Shell::constant_weight() const {
    for (const auto& w : weights)
        if (!scalar_eq(w, weights.front())) return false;
    return true;
}

size_t WeightedDesign::size() const {
    size_t total = contains_origin ? 1 : 0;
    for (const auto& s : shells) total += s.points.size();
    return total;
}

int WeightedDesign::distinct_radii() const {
    std::vector<Scalar> seen;
    for (const auto& s : shells) {
        bool fresh = true;
        for (const auto& r : seen)
            if (scalar_eq(r, s.radius2)) fresh = false;
        if (fresh) seen.push_back(s.radius2);
    }
    return static_cast<int>(seen.size());
}

WeightedDesign make_orbit_design(GroupType type, int n, const std::vector<int>& J,
                                 const std::map<int, Scalar>& radii,
                                 const std::map<int, Scalar>& weights) {
    if (J.empty()) throw scalar_error("make_orbit_design: empty corner index set");
    std::vector<int> sorted = J;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw scalar_error("make_orbit_design: repeated corner index");
    ReflectionGroup G = build_group(type, n);
    WeightedDesign X;
    X.n = n;
    X.orbit_based = true;
    X.type = type;
    X.rank = n;
    X.J = sorted;
    for (int k : sorted) {
        if (k < 1 || k > n) throw scalar_error("make_orbit_design: corner index out of range");
        auto rit = radii.find(k);
        auto wit = weights.find(k);
        if (rit == radii.end() || wit == weights.end())
            throw scalar_error("make_orbit_design: missing radius or weight for k=" +
                               std::to_string(k));
        const Scalar& r = rit->second;
        const Scalar& w = wit->second;
        if (r.sign() <= 0) throw scalar_error("make_orbit_design: radius must be positive");
        if (w.sign() <= 0) throw scalar_error("make_orbit_design: weight must be positive");
        Orbit ob = corner_orbit(G, k);
        Shell sh;
        sh.corner_k = k;
        sh.radius = r;
        sh.radius2 = mul_mixed(r, r);
        Scalar factor;
        if (auto root = ob.norm2.try_sqrt())
            factor = mul_mixed(r, root->inverse());
        else
            factor = Scalar(r.to_bigfloat() /
                            boost::multiprecision::sqrt(ob.norm2.to_bigfloat()));
        sh.points.reserve(ob.points.size());
        for (const auto& x : ob.points) sh.points.push_back(vec_scaled(x, factor));
        sh.weights.assign(ob.points.size(), w);
        X.shells.push_back(std::move(sh));
    }
    return X;
}

WeightedDesign make_explicit_design(const std::vector<Vec>& points,
                                    const std::vector<Scalar>& weights) {
    if (points.empty()) throw scalar_error("make_explicit_design: no points");
    if (points.size() != weights.size())
        throw scalar_error("make_explicit_design: points/weights size mismatch");
    WeightedDesign X;
    X.n = static_cast<int>(points.front().size());
    X.orbit_based = false;
    for (size_t i = 0; i < points.size(); ++i) {
        if (static_cast<int>(points[i].size()) != X.n)
            throw scalar_error("make_explicit_design: inconsistent dimensions");
        if (weights[i].sign() <= 0)
            throw scalar_error("make_explicit_design: weights must be positive");
        Scalar norm2 = dot(points[i], points[i]);
        if (norm2.is_zero()) {
            X.contains_origin = true;
            X.origin_weight += weights[i];
            continue;
        }
        bool placed = false;
        for (auto& sh : X.shells) {
            if (scalar_eq(sh.radius2, norm2)) {
                sh.points.push_back(points[i]);
                sh.weights.push_back(weights[i]);
                placed = true;
                break;
            }
        }
        if (!placed) {
            Shell sh;
            sh.radius2 = norm2;
            sh.radius = norm2.sqrt();
            sh.points.push_back(points[i]);
            sh.weights.push_back(weights[i]);
            X.shells.push_back(std::move(sh));
        }
    }
    std::sort(X.shells.begin(), X.shells.end(), [](const Shell& a, const Shell& b) {
        return a.radius2.to_bigfloat() < b.radius2.to_bigfloat();
    });
    return X;
}

// ---------------------------------------------------------------------------
// Strength certification
// ---------------------------------------------------------------------------

StrengthReport strength_invariant(const WeightedDesign& X, const ReflectionGroup& G,
                                  int t_max) {
    if (X.n != G.n)
        throw scalar_error("strength_invariant: design dimension differs from the rank");
    if (t_max < 0) throw scalar_error("strength_invariant: negative strength bound");

    struct ShellData {
        Scalar w;
        long long N = 0;
        Scalar r2;
        Scalar r;
        int corner_k = 0;
        const Vec* rep = nullptr;
        bool exact = true;
    };
    std::vector<ShellData> data;
    for (const auto& sh : X.shells) {
        if (sh.points.empty()) throw scalar_error("strength_invariant: empty shell");
        if (!sh.constant_weight())
            throw scalar_error("strength_invariant: shell weight is not constant");
        if (sh.corner_k == 0) {
            // The shell must be a single orbit of G; regenerate it from the
            // representative and match the point sets.
            Orbit ob = orbit(G, sh.points.front());
            if (ob.points.size() != sh.points.size())
                throw scalar_error("strength_invariant: shell is not closed under the group");
            BigFloat tol = Config::tolerance() * 64;
            for (const auto& x : sh.points) {
                bool found = false;
                for (const auto& y : ob.points) {
                    BigFloat dist(0);
                    for (size_t c = 0; c < x.size(); ++c) {
                        BigFloat d = x[c].to_bigfloat() - y[c].to_bigfloat();
                        dist += d * d;
                    }
                    if (dist <= tol) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw scalar_error(
                        "strength_invariant: shell is not closed under the group");
            }
        }
        ShellData sd;
        sd.w = sh.weights.front();
        sd.N = static_cast<long long>(sh.points.size());
        sd.r2 = sh.radius2;
        sd.r = sh.radius;
        sd.corner_k = sh.corner_k;
        sd.rep = &sh.points.front();
        sd.exact = sd.w.is_exact() && sd.r2.is_exact() && sd.r.is_exact();
        data.push_back(sd);
    }

    StrengthReport rep;
    rep.method = "invariant";
    rep.t_certified = t_max;
    // Cache the exact unit-scale values phi(v_k) per (l, phi) and shell.
    std::map<std::pair<int, int>, std::vector<RadicalSum>> corner_cache;
    std::map<std::pair<int, int>, std::vector<std::unique_ptr<PointEval>>> eval_cache;

    for (int m = 1; m <= t_max; ++m) {
        bool failed = false;
        for (int l = (m % 2 == 0) ? 2 : 1; l <= m; l += 2) {
            int j = (m - l) / 2;
            const auto& basis = invariant_harm_basis(G, l);
            for (size_t pi = 0; pi < basis.size(); ++pi) {
                const MultiPoly& phi = basis[pi];
                Accum acc;
                for (size_t si = 0; si < data.size(); ++si) {
                    const ShellData& sd = data[si];
                    if (sd.corner_k > 0 && sd.exact) {
                        auto key = std::make_pair(l, static_cast<int>(pi));
                        auto& vals = corner_cache[key];
                        if (vals.empty()) {
                            vals.resize(X.shells.size());
                            for (size_t q = 0; q < data.size(); ++q)
                                if (data[q].corner_k > 0)
                                    vals[q] = corner_eval_exact(G.type, G.n,
                                                                data[q].corner_k, phi);
                        }
                        // w * N * r^(2j+l) * phi(v_k), split so each factor
                        // stays a single radical.
                        RadicalSum term = vals[si];
                        term *= RadicalSum(Scalar(sd.N));
                        if (l % 2 == 0) {
                            term *= RadicalSum(mul_mixed(sd.w, sd.r2.pow(j + l / 2)));
                        } else {
                            term *= RadicalSum(mul_mixed(sd.w, sd.r2.pow(j + (l - 1) / 2)));
                            term *= RadicalSum(sd.r);
                        }
                        acc.add(term);
                        continue;
                    }
                    // General orbit shell: phi is constant on the orbit, so the
                    // shell contributes w * r^(2j) * N * phi(rep) at true scale.
                    auto key = std::make_pair(static_cast<int>(si), 0);
                    auto& ev = eval_cache[key];
                    if (ev.empty()) ev.push_back(std::make_unique<PointEval>(sd.rep));
                    PointEval& pe = *ev.front();
                    if (pe.exact() && sd.exact) {
                        RadicalSum term = pe.eval_exact(phi);
                        term *= RadicalSum(Scalar(sd.N));
                        term *= RadicalSum(mul_mixed(sd.w, sd.r2.pow(j)));
                        acc.add(term);
                    } else {
                        BigFloat term = pe.eval_float(phi);
                        term *= BigFloat(sd.N);
                        term *= sd.w.to_bigfloat();
                        term *= boost::multiprecision::pow(sd.r2.to_bigfloat(), j);
                        acc.add_float(term);
                    }
                }
                Residual res = acc.finish(l, j);
                if (!res.zero) failed = true;
                rep.residuals.push_back(std::move(res));
            }
        }
        if (failed) {
            rep.t_certified = m - 1;
            return rep;
        }
    }
    return rep;
}

StrengthReport strength_full(const WeightedDesign& X, int t_max) {
    if (t_max < 0) throw scalar_error("strength_full: negative strength bound");
    StrengthReport rep;
    rep.method = "full_harmonic";
    rep.t_certified = t_max;

    struct P {
        PointEval ev;
        Scalar w;
        Scalar r2;
        bool exact;
    };
    std::vector<P> pts;
    for (const auto& sh : X.shells) {
        for (size_t i = 0; i < sh.points.size(); ++i) {
            P p{PointEval(&sh.points[i]), sh.weights[i], sh.radius2,
                sh.weights[i].is_exact() && sh.radius2.is_exact()};
            pts.push_back(std::move(p));
        }
    }

    std::map<int, std::vector<MultiPoly>> bases;
    for (int m = 1; m <= t_max; ++m) {
        bool failed = false;
        for (int l = (m % 2 == 0) ? 2 : 1; l <= m; l += 2) {
            int j = (m - l) / 2;
            auto it = bases.find(l);
            if (it == bases.end()) it = bases.emplace(l, harm_basis(X.n, l)).first;
            for (const MultiPoly& phi : it->second) {
                Accum acc;
                for (auto& p : pts) {
                    if (p.exact && p.ev.exact()) {
                        RadicalSum term = p.ev.eval_exact(phi);
                        term *= RadicalSum(mul_mixed(p.w, p.r2.pow(j)));
                        acc.add(term);
                    } else {
                        BigFloat term = p.ev.eval_float(phi);
                        term *= p.w.to_bigfloat();
                        term *= boost::multiprecision::pow(p.r2.to_bigfloat(), j);
                        acc.add_float(term);
                    }
                }
                Residual res = acc.finish(l, j);
                if (!res.zero) failed = true;
                rep.residuals.push_back(std::move(res));
            }
        }
        if (failed) {
            rep.t_certified = m - 1;
            return rep;
        }
    }
    return rep;
}

Rational sphere_moment(int n, const Expo& a) {
    int m = expo_degree(a);
    if (m % 2 != 0) return Rational(0);
    for (int v : a)
        if (v % 2 != 0) return Rational(0);
    Rational num(1);
    for (int v : a)
        for (int f = v - 1; f >= 1; f -= 2) num *= f;
    Rational den(1);
    for (int i = 0; i < m / 2; ++i) den *= (n + 2 * i);
    return num / den;
}

StrengthReport strength_direct(const WeightedDesign& X, int t_max) {
    if (t_max < 0) throw scalar_error("strength_direct: negative strength bound");
    StrengthReport rep;
    rep.method = "direct_integration";
    rep.t_certified = t_max;

    // Merge shells that share a radius: the integral side only sees the
    // distinct spheres and their total weights.
    struct RC {
        Scalar r2;
        Accum wsum;
    };
    std::vector<RC> classes;
    for (const auto& sh : X.shells) {
        RC* target = nullptr;
        for (auto& rc : classes)
            if (scalar_eq(rc.r2, sh.radius2)) target = &rc;
        if (!target) {
            classes.push_back(RC{sh.radius2, Accum{}});
            target = &classes.back();
        }
        for (const auto& w : sh.weights) {
            if (w.is_exact())
                target->wsum.add(RadicalSum(w));
            else
                target->wsum.add_float(w.to_bigfloat());
        }
    }

    std::vector<PointEval> evs;
    std::vector<Scalar> ws;
    for (const auto& sh : X.shells)
        for (size_t i = 0; i < sh.points.size(); ++i) {
            evs.emplace_back(&sh.points[i]);
            ws.push_back(sh.weights[i]);
        }

    for (int m = 1; m <= t_max; ++m) {
        bool degree_exact = true;
        for (const Expo& e : monomials_of_degree(X.n, m)) {
            Accum acc;
            for (size_t i = 0; i < evs.size(); ++i) {
                if (ws[i].is_exact() && evs[i].exact()) {
                    RadicalSum term = evs[i].eval_exact(MultiPoly::monomial(e));
                    term *= RadicalSum(ws[i]);
                    acc.add(term);
                } else {
                    acc.add_float(evs[i].eval_float(MultiPoly::monomial(e)) *
                                  ws[i].to_bigfloat());
                }
            }
            Rational mom = sphere_moment(X.n, e);
            if (mom != 0) {
                for (auto& rc : classes) {
                    bool ok = rc.wsum.exact && rc.r2.is_exact();
                    if (ok) {
                        RadicalSum term = rc.wsum.rs;
                        term *= RadicalSum(rc.r2.pow(m / 2));
                        term *= RadicalSum(mom);
                        acc.sub(term);
                    } else {
                        BigFloat w = rc.wsum.exact ? rc.wsum.rs.to_bigfloat() : rc.wsum.bf;
                        acc.add_float(-w *
                                      boost::multiprecision::pow(rc.r2.to_bigfloat(), m / 2) *
                                      static_cast<BigFloat>(mom));
                    }
                }
            }
            Residual res = acc.finish(m, 0);
            degree_exact = degree_exact && res.exact;
            if (!res.zero) {
                rep.residuals.push_back(std::move(res));
                rep.t_certified = m - 1;
                return rep;
            }
        }
        Residual pass;
        pass.l = m;
        pass.j = 0;
        pass.exact = degree_exact;
        pass.zero = true;
        rep.residuals.push_back(std::move(pass));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Fisher-type bounds and tightness
// ---------------------------------------------------------------------------

long long dim_P(int n, int l, int p, int eps) {
    if (n < 1 || l < 0 || p < eps || eps < 0 || eps > 1)
        throw scalar_error("dim_P: invalid parameters");
    int pp = p - eps;
    if (l >= 2 * pp) {
        long long s = eps;
        for (int i = 0; i <= 2 * pp - 1; ++i) s += binomial(n + l - i - 1, n - 1);
        return s;
    }
    return binomial(n + l, l);
}

long long dim_Pstar(int n, int l, int p, int eps) {
    if (n < 1 || l < 0 || p < eps || eps < 0 || eps > 1)
        throw scalar_error("dim_Pstar: invalid parameters");
    int pp = p - eps;
    if (l <= 2 * pp - 1) {
        long long s = 0;
        for (int i = 0; i <= l / 2; ++i) s += binomial(n + l - 2 * i - 1, n - 1);
        return s;
    }
    long long s = (l % 2 == 0 && eps == 1) ? 1 : 0;
    for (int i = 0; i <= pp - 1; ++i) s += binomial(n + l - 2 * i - 1, n - 1);
    return s;
}

long long fisher_bound(int n, int e, Parity parity, int p, bool eps_S,
                       bool origin_in_X) {
    if (e < 0) throw scalar_error("fisher_bound: negative strength");
    if (parity == Parity::even) return dim_P(n, e, p, eps_S ? 1 : 0);
    long long b = 2 * dim_Pstar(n, e - 1, p, eps_S ? 1 : 0);
    if (e % 2 == 1 && origin_in_X) b -= 1;
    return b;
}

TightnessReport is_tight(const WeightedDesign& X, int t) {
    if (t < 1) throw scalar_error("is_tight: strength must be positive");
    Parity parity;
    int e = strength_from_parity(t, &parity);
    int pp = X.distinct_radii();
    int eps = X.contains_origin ? 1 : 0;
    TightnessReport rep;
    rep.size = static_cast<long long>(X.size());
    rep.bound = fisher_bound(X.n, e, parity, pp + eps, X.contains_origin,
                             X.contains_origin);
    rep.slack = rep.size - rep.bound;
    rep.tight = rep.slack == 0;
    return rep;
}

// ---------------------------------------------------------------------------
// Nonexistence obstructions
// ---------------------------------------------------------------------------

std::vector<ObstructionRow> nonexistence_obstruction(GroupType type, int n) {
    ReflectionGroup G = build_group(type, n);
    std::vector<ObstructionRow> rows;
    int expected_sign = (type == GroupType::A) ? -1 : 1;
    if (type == GroupType::A) {
        MultiPoly f = closed_form_invariant(type, n, "obstruction6");
        for (int k = 1; k <= n; ++k) {
            Orbit ob = corner_orbit(G, k);
            Scalar sum(0);
            for (const auto& x : ob.points) sum += f.evaluate(x);
            // Rescale from the exact corner representative to the unit sphere.
            Scalar val = sum * ob.norm2.pow(3).inverse();
            rows.push_back(ObstructionRow{k, val, val.sign()});
        }
    } else {
        MultiPoly f8 = closed_form_invariant(type, n, "f8");
        for (int k = 1; k <= n; ++k) {
            RadicalSum v = corner_eval_exact(type, n, k, f8);
            auto s = v.to_scalar();
            if (!s) throw scalar_error("nonexistence_obstruction: unexpected radical value");
            Scalar val = *s * Scalar(corner_orbit_size(type, n, k));
            rows.push_back(ObstructionRow{k, val, val.sign()});
        }
    }
    for (const auto& r : rows)
        if (r.sign != expected_sign)
            throw scalar_error("nonexistence_obstruction: sign pattern violated at k=" +
                               std::to_string(r.k));
    return rows;
}

// ---------------------------------------------------------------------------
// Classification of tight corner-orbit designs
// ---------------------------------------------------------------------------

namespace {

// Exact unit-scale values of the invariant harmonic basis at every corner.
// The per-degree value tables are built on demand: the Molien dimensions
// alone decide which conditions exist, and most configurations are pruned
// before any basis is needed.
struct CornerTable {
    GroupType type;
    int n = 0;
    ReflectionGroup G;
    std::vector<long long> N;                                    // index k-1
    std::vector<long long> qdims;                                // q_l, l = 0..t_max
    std::map<int, std::vector<std::vector<RadicalSum>>> vals;    // l -> phi -> k-1

    const std::vector<std::vector<RadicalSum>>& ensure(int l) {
        auto it = vals.find(l);
        if (it != vals.end()) return it->second;
        const auto& basis = invariant_harm_basis(G, l);
        std::vector<std::vector<RadicalSum>> rows;
        for (const auto& phi : basis) {
            std::vector<RadicalSum> per_k;
            for (int k = 1; k <= n; ++k)
                per_k.push_back(corner_eval_exact(type, n, k, phi));
            rows.push_back(std::move(per_k));
        }
        return vals.emplace(l, std::move(rows)).first->second;
    }
};

CornerTable build_corner_table(GroupType type, int n, int t_max) {
    CornerTable tab;
    tab.type = type;
    tab.n = n;
    tab.G = build_group(type, n);
    for (int k = 1; k <= n; ++k) tab.N.push_back(corner_orbit_size(type, n, k));
    tab.qdims = molien_dims(tab.G, t_max);
    return tab;
}

struct CondSpec {
    int l = 0, j = 0, phi = 0;
};

std::vector<CondSpec> conditions_for(const CornerTable& tab, int t) {
    std::vector<CondSpec> conds;
    for (int l = 1; l <= t && l < static_cast<int>(tab.qdims.size()); ++l) {
        if (tab.qdims[l] == 0) continue;
        for (int j = 0; 2 * j + l <= t; ++j)
            for (long long phi = 0; phi < tab.qdims[l]; ++phi)
                conds.push_back(CondSpec{l, j, static_cast<int>(phi)});
    }
    return conds;
}

// Coefficient of w_i in each condition at the given exact class radii.
std::vector<std::vector<RadicalSum>> condition_coeffs(
    CornerTable& tab, const std::vector<int>& J, const std::vector<int>& cls,
    const std::vector<CondSpec>& conds, const std::vector<Scalar>& radii) {
    std::vector<std::vector<RadicalSum>> out;
    out.reserve(conds.size());
    for (const auto& c : conds) {
        std::vector<RadicalSum> coeffs(J.size());
        for (size_t i = 0; i < J.size(); ++i) {
            RadicalSum v = tab.ensure(c.l)[c.phi][J[i] - 1];
            v *= RadicalSum(Scalar(tab.N[J[i] - 1]));
            v *= RadicalSum(radii[cls[i]].pow(2 * c.j + c.l));
            coeffs[i] = std::move(v);
        }
        out.push_back(std::move(coeffs));
    }
    return out;
}

// Decompose radical-linear conditions into rational rows (the radicands are
// linearly independent over Q) and return the rational kernel.
std::vector<Vec> weight_kernel(const std::vector<std::vector<RadicalSum>>& coeffs,
                               size_t m) {
    Mat rows;
    for (const auto& cond : coeffs) {
        std::set<long long> rads;
        for (const auto& c : cond)
            for (const auto& [r, q] : c.parts()) rads.insert(r);
        for (long long r : rads) {
            Vec row(m, Scalar(0));
            bool nonzero = false;
            for (size_t i = 0; i < m; ++i) {
                auto it = cond[i].parts().find(r);
                if (it != cond[i].parts().end()) {
                    row[i] = Scalar(it->second);
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    return nullspace(std::move(rows), static_cast<int>(m));
}

std::optional<std::vector<Rational>> positive_vector(const std::vector<Vec>& basis,
                                                     size_t m) {
    if (basis.empty()) return std::nullopt;
    auto attempt = [&](const Vec& v) -> std::optional<std::vector<Rational>> {
        int s = 0;
        for (const auto& x : v) {
            int sg = x.sign();
            if (sg == 0) return std::nullopt;
            if (s == 0)
                s = sg;
            else if (sg != s)
                return std::nullopt;
        }
        std::vector<Rational> w;
        Rational lead = v.front().rational();
        for (const auto& x : v) w.push_back(x.rational() / lead);
        return w;
    };
    for (const auto& b : basis)
        if (auto w = attempt(b)) return w;
    Vec sum(m, Scalar(0));
    for (const auto& b : basis)
        for (size_t i = 0; i < m; ++i) sum[i] += b[i];
    if (auto w = attempt(sum)) return w;
    for (int trial = 0; trial < 24; ++trial) {
        Vec v(m, Scalar(0));
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            long long c = 1 + ((trial * 7 + static_cast<long long>(bi) * 3) % 11);
            for (size_t i = 0; i < m; ++i) v[i] += basis[bi][i] * Scalar(c);
        }
        if (auto w = attempt(v)) return w;
    }
    return std::nullopt;
}

bool confirm_solution(const std::vector<std::vector<RadicalSum>>& coeffs,
                      const std::vector<Rational>& w) {
    for (const auto& cond : coeffs) {
        RadicalSum acc;
        for (size_t i = 0; i < w.size(); ++i) {
            RadicalSum t = cond[i];
            t *= RadicalSum(w[i]);
            acc += t;
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

Rational sample_radius(int round, int c) {
    switch (round % 9) {
        case 0: return Rational(c + 1);
        case 1: return ratio(1, c + 1);
        case 2: return ratio(2 * c + 3, 2);
        case 3: return Rational(c + 4);
        case 4: return ratio(2, 2 * c + 3);
        case 5: return ratio(3 * c + 4, 3);
        case 6: return ratio(c + 6, 4);
        case 7: return ratio(1, c + 6);
        default: return ratio(4 * c + 5, 4);
    }
}

// Continued-fraction reconstruction of a nearby small rational.
std::optional<Rational> rationalize(const BigFloat& x, long long max_den,
                                    const BigFloat& tol) {
    BigFloat v = x;
    Integer p0(1), q0(0);
    Integer a = boost::multiprecision::floor(v).convert_to<Integer>();
    Integer p1 = a, q1(1);
    for (int it = 0; it < 64; ++it) {
        if (q1 > 0 && q1 <= max_den) {
            Rational cand(p1, q1);
            if (abs(x - static_cast<BigFloat>(cand)) <= tol) return cand;
        }
        BigFloat frac = v - static_cast<BigFloat>(a);
        if (frac <= tol) break;
        v = 1 / frac;
        a = boost::multiprecision::floor(v).convert_to<Integer>();
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (q1 > max_den * 4) break;
    }
    return std::nullopt;
}

// Numeric data for the Gauss-Newton search over radii and weights.
struct NumericSystem {
    std::vector<std::vector<BigFloat>> a;  // per condition, per position: N*phi(v_k)
    std::vector<int> powr;                 // per condition: exponent 2j+l
    std::vector<int> cls;                  // class per position
    int p = 1;                             // number of radius classes
    size_t m = 0;                          // number of orbits

    // Unknowns: u_1..u_{p-1} (class radii, class 0 fixed at 1) followed by
    // w_1..w_{m-1} (weights, position 0 fixed at 1); fixed_u marks radii that
    // are pinned to given values instead of being solved for.
    std::vector<BigFloat> fixed_u;         // size p; entry 0 is always 1
    std::vector<bool> u_free;              // size p; entry 0 is always false

    size_t nvars() const {
        size_t nu = 0;
        for (int c = 0; c < p; ++c)
            if (u_free[c]) ++nu;
        return nu + (m - 1);
    }
    void unpack(const std::vector<BigFloat>& x, std::vector<BigFloat>& u,
                std::vector<BigFloat>& w) const {
        u = fixed_u;
        size_t idx = 0;
        for (int c = 0; c < p; ++c)
            if (u_free[c]) u[c] = x[idx++];
        w.assign(m, BigFloat(1));
        for (size_t i = 1; i < m; ++i) w[i] = x[idx++];
    }
    std::vector<BigFloat> residual(const std::vector<BigFloat>& x) const {
        std::vector<BigFloat> u, w;
        unpack(x, u, w);
        std::vector<BigFloat> r(a.size(), BigFloat(0));
        for (size_t c = 0; c < a.size(); ++c)
            for (size_t i = 0; i < m; ++i)
                r[c] += w[i] * a[c][i] * boost::multiprecision::pow(u[cls[i]], powr[c]);
        return r;
    }
    std::vector<std::vector<BigFloat>> jacobian(const std::vector<BigFloat>& x) const {
        std::vector<BigFloat> u, w;
        unpack(x, u, w);
        std::vector<std::vector<BigFloat>> jac(a.size(),
                                               std::vector<BigFloat>(nvars(), BigFloat(0)));
        for (size_t c = 0; c < a.size(); ++c) {
            size_t idx = 0;
            for (int cl = 0; cl < p; ++cl) {
                if (!u_free[cl]) continue;
                BigFloat g(0);
                for (size_t i = 0; i < m; ++i)
                    if (cls[i] == cl)
                        g += w[i] * a[c][i] * powr[c] *
                             boost::multiprecision::pow(u[cl], powr[c] - 1);
                jac[c][idx++] = g;
            }
            for (size_t i = 1; i < m; ++i)
                jac[c][idx++] = a[c][i] * boost::multiprecision::pow(u[cls[i]], powr[c]);
        }
        return jac;
    }
};

std::optional<std::vector<BigFloat>> solve_dense(std::vector<std::vector<BigFloat>> h,
                                                 std::vector<BigFloat> g) {
    size_t n = h.size();
    for (size_t c = 0; c < n; ++c) {
        size_t best = c;
        for (size_t r = c + 1; r < n; ++r)
            if (abs(h[r][c]) > abs(h[best][c])) best = r;
        if (h[best][c] == 0) return std::nullopt;
        std::swap(h[c], h[best]);
        std::swap(g[c], g[best]);
        BigFloat inv = 1 / h[c][c];
        for (size_t k = c; k < n; ++k) h[c][k] *= inv;
        g[c] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || h[r][c] == 0) continue;
            BigFloat f = h[r][c];
            for (size_t k = c; k < n; ++k) h[r][k] -= f * h[c][k];
            g[r] -= f * g[c];
        }
    }
    return g;
}

BigFloat res_norm(const std::vector<BigFloat>& r) {
    BigFloat n(0);
    for (const auto& v : r)
        if (abs(v) > n) n = abs(v);
    return n;
}

// Damped Gauss-Newton from one starting point; returns a solution with
// max-residual below target, or nothing.
std::optional<std::vector<BigFloat>> newton_solve(const NumericSystem& sys,
                                                  std::vector<BigFloat> x,
                                                  const BigFloat& target) {
    BigFloat lambda = BigFloat(1) / 1000000;
    std::vector<BigFloat> r = sys.residual(x);
    BigFloat cur = res_norm(r);
    BigFloat stall_mark = cur;
    int stall = 0;
    for (int it = 0; it < 60; ++it) {
        if (cur < target) return x;
        // Abort runs that stopped making progress (no root in this basin).
        if (cur * 2 > stall_mark) {
            if (++stall > 10) break;
        } else {
            stall = 0;
            stall_mark = cur;
        }
        auto jac = sys.jacobian(x);
        size_t nv = sys.nvars();
        std::vector<std::vector<BigFloat>> h(nv, std::vector<BigFloat>(nv, BigFloat(0)));
        std::vector<BigFloat> g(nv, BigFloat(0));
        for (size_t c = 0; c < jac.size(); ++c)
            for (size_t i = 0; i < nv; ++i) {
                g[i] -= jac[c][i] * r[c];
                for (size_t k = 0; k <= i; ++k) h[i][k] += jac[c][i] * jac[c][k];
            }
        for (size_t i = 0; i < nv; ++i)
            for (size_t k = i + 1; k < nv; ++k) h[i][k] = h[k][i];
        bool improved = false;
        for (int damp = 0; damp < 8 && !improved; ++damp) {
            auto hd = h;
            for (size_t i = 0; i < nv; ++i)
                hd[i][i] += lambda * (hd[i][i] > 1 ? hd[i][i] : BigFloat(1));
            auto delta = solve_dense(hd, g);
            if (!delta) {
                lambda *= 16;
                continue;
            }
            std::vector<BigFloat> xn(nv);
            BigFloat scale(1);
            for (int half = 0; half < 40; ++half) {
                bool positive = true;
                for (size_t i = 0; i < nv; ++i) {
                    xn[i] = x[i] + scale * (*delta)[i];
                    if (xn[i] <= 0) positive = false;
                }
                if (positive) break;
                scale /= 2;
            }
            bool positive = true;
            for (size_t i = 0; i < nv; ++i)
                if (xn[i] <= 0) positive = false;
            if (!positive) {
                lambda *= 16;
                continue;
            }
            auto rn = sys.residual(xn);
            BigFloat nn = res_norm(rn);
            if (nn < cur) {
                x = std::move(xn);
                r = std::move(rn);
                cur = nn;
                lambda /= 4;
                if (lambda < BigFloat(1) / 1000000000) lambda = BigFloat(1) / 1000000000;
                improved = true;
            } else {
                lambda *= 16;
            }
        }
        if (!improved) break;
    }
    if (cur < target) return x;
    return std::nullopt;
}

// Turn a numeric radius into an exact scalar: a small rational, or the
// square root of a small rational.
std::optional<Scalar> exact_radius(const BigFloat& u) {
    BigFloat tol = boost::multiprecision::pow(BigFloat(2), -100);
    if (auto r = rationalize(u, 1000000, tol)) return Scalar(*r);
    if (auto s = rationalize(u * u, 1000000, tol)) {
        if (*s <= 0) return std::nullopt;
        Scalar root = Scalar(*s).sqrt();
        if (root.is_exact()) return root;
    }
    return std::nullopt;
}

struct SolveOutcome {
    bool family = false;
    int free_class = -1;
    std::vector<ClassifiedDesign::Assignment> samples;
    bool resolved = true;
};

ClassifiedDesign::Assignment make_assignment(const std::vector<int>& J,
                                             const std::vector<int>& cls,
                                             const std::vector<Scalar>& radii,
                                             const std::vector<Rational>& w) {
    ClassifiedDesign::Assignment a;
    for (size_t i = 0; i < J.size(); ++i) {
        a.radius2[J[i]] = radii[cls[i]].pow(2);
        a.weight[J[i]] = Scalar(w[i]);
    }
    return a;
}

// Attempt an exact solve with all class radii pinned to the given values.
std::optional<std::vector<Rational>> solve_at(CornerTable& tab,
                                              const std::vector<int>& J,
                                              const std::vector<int>& cls,
                                              const std::vector<CondSpec>& conds,
                                              const std::vector<Scalar>& radii) {
    auto coeffs = condition_coeffs(tab, J, cls, conds, radii);
    auto kernel = weight_kernel(coeffs, J.size());
    auto w = positive_vector(kernel, J.size());
    if (!w) return std::nullopt;
    if (!confirm_solution(coeffs, *w))
        throw scalar_error("classify: exact confirmation failed unexpectedly");
    return w;
}

}  // namespace

WeightedDesign design_from_classified(const ClassifiedDesign& row, size_t sample) {
    if (sample >= row.samples.size())
        throw scalar_error("design_from_classified: sample index out of range");
    std::map<int, Scalar> radii, weights;
    for (const auto& [k, r2] : row.samples[sample].radius2) radii[k] = r2.sqrt();
    for (const auto& [k, w] : row.samples[sample].weight) weights[k] = w;
    return make_orbit_design(row.type, row.n, row.J, radii, weights);
}

std::vector<ClassifiedDesign> classify_corner_designs(GroupType type, int n_max,
                                                      int t_max) {
    if (t_max < 2) throw scalar_error("classify: t_max must be at least 2");
    if (n_max > static_cast<int>(Config::orbit_rank_cap()))
        throw scalar_error("classify: n_max " + std::to_string(n_max) +
                           " exceeds the orbit rank cap " +
                           std::to_string(Config::orbit_rank_cap()));
    std::vector<ClassifiedDesign> rows;
    for (int n = min_rank(type); n <= n_max; ++n) {
        CornerTable tab = build_corner_table(type, n, t_max);
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> J;
            for (int k = 1; k <= n; ++k)
                if (mask & (1 << (k - 1))) J.push_back(k);
            size_t m = J.size();
            long long card = 0;
            for (int k : J) card += tab.N[k - 1];

            // Enumerate radius-class partitions of J (restricted growth).
            std::vector<std::vector<int>> partitions;
            {
                std::vector<int> a(m, 0);
                std::function<void(size_t, int)> rec = [&](size_t i, int mx) {
                    if (i == m) {
                        partitions.push_back(a);
                        return;
                    }
                    for (int c = 0; c <= mx + 1 && c < static_cast<int>(m); ++c) {
                        a[i] = c;
                        rec(i + 1, std::max(mx, c));
                    }
                };
                rec(1, 0);
            }

            for (int t = 2; t <= t_max; ++t) {
                Parity parity;
                int e = strength_from_parity(t, &parity);
                for (const auto& cls : partitions) {
                    int p = 1 + *std::max_element(cls.begin(), cls.end());
                    if (fisher_bound(n, e, parity, p, false, false) != card) continue;
                    auto conds = conditions_for(tab, t);

                    // A condition whose nonzero coefficients all share one
                    // sign can never vanish with positive weights, at any
                    // choice of radii.
                    bool feasible = true;
                    for (const auto& c : conds) {
                        int pos = 0, neg = 0;
                        for (int k : J) {
                            const RadicalSum& v = tab.ensure(c.l)[c.phi][k - 1];
                            if (v.is_zero()) continue;
                            (v.to_bigfloat() > 0 ? pos : neg) += 1;
                        }
                        if (pos + neg > 0 && (pos == 0 || neg == 0)) {
                            feasible = false;
                            break;
                        }
                    }
                    if (!feasible) continue;

                    SolveOutcome outcome;
                    bool solved = false;

                    if (p == 1) {
                        std::vector<Scalar> radii{Scalar(1)};
                        if (auto w = solve_at(tab, J, cls, conds, radii)) {
                            outcome.samples.push_back(
                                make_assignment(J, cls, radii, *w));
                            solved = true;
                        }
                    } else {
                        // Generic radii: a solution at three independent
                        // samples certifies a family with free radii.
                        for (int round = 0; round < 9 &&
                             outcome.samples.size() < 3; ++round) {
                            std::vector<Scalar> radii(p, Scalar(1));
                            for (int c = 1; c < p; ++c)
                                radii[c] = Scalar(sample_radius(round, c));
                            if (auto w = solve_at(tab, J, cls, conds, radii))
                                outcome.samples.push_back(
                                    make_assignment(J, cls, radii, *w));
                        }
                        if (outcome.samples.size() >= 3) {
                            outcome.family = true;
                            outcome.free_class = (p == 2) ? 1 : -1;
                            solved = true;
                        } else {
                            outcome.samples.clear();
                        }

                        // One free radius with the rest solved numerically
                        // (only meaningful for three or more classes).
                        if (!solved && p >= 3) {
                            for (int f = 1; f < p && !solved; ++f) {
                                std::vector<ClassifiedDesign::Assignment> samples;
                                for (int round = 0; round < 9 && samples.size() < 3;
                                     ++round) {
                                    Rational uf = sample_radius(round, f);
                                    NumericSystem sys;
                                    sys.p = p;
                                    sys.m = m;
                                    sys.cls.assign(cls.begin(), cls.end());
                                    sys.fixed_u.assign(p, BigFloat(1));
                                    sys.u_free.assign(p, true);
                                    sys.u_free[0] = false;
                                    sys.u_free[f] = false;
                                    sys.fixed_u[f] = static_cast<BigFloat>(uf);
                                    for (const auto& c : conds) {
                                        std::vector<BigFloat> av;
                                        BigFloat scale(0);
                                        for (size_t i = 0; i < m; ++i) {
                                            BigFloat v =
                                                tab.ensure(c.l)[c.phi][J[i] - 1]
                                                    .to_bigfloat() *
                                                BigFloat(tab.N[J[i] - 1]);
                                            av.push_back(v);
                                            scale += abs(v);
                                        }
                                        if (scale == 0) continue;
                                        for (auto& v : av) v /= scale;
                                        sys.a.push_back(std::move(av));
                                        sys.powr.push_back(2 * c.j + c.l);
                                    }
                                    BigFloat target =
                                        boost::multiprecision::pow(BigFloat(2), -130);
                                    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + round);
                                    std::uniform_real_distribution<double> du(-1.2, 1.2);
                                    std::uniform_real_distribution<double> dw(-1.5, 2.0);
                                    size_t before = samples.size();
                                    for (int start = 0; start < 10 &&
                                         samples.size() == before; ++start) {
                                        std::vector<BigFloat> x0;
                                        for (size_t v = 0; v + (m - 1) < sys.nvars(); ++v)
                                            x0.push_back(boost::multiprecision::exp(
                                                BigFloat(du(rng))));
                                        for (size_t i = 1; i < m; ++i)
                                            x0.push_back(boost::multiprecision::exp(
                                                BigFloat(dw(rng))));
                                        auto sol = newton_solve(sys, x0, target);
                                        if (!sol) continue;
                                        std::vector<BigFloat> u, w;
                                        sys.unpack(*sol, u, w);
                                        std::vector<Scalar> radii(p);
                                        radii[0] = Scalar(1);
                                        radii[f] = Scalar(uf);
                                        bool ok = true;
                                        for (int c2 = 1; c2 < p; ++c2) {
                                            if (c2 == f) continue;
                                            auto ex = exact_radius(u[c2]);
                                            if (!ex) {
                                                ok = false;
                                                break;
                                            }
                                            radii[c2] = *ex;
                                        }
                                        if (!ok) continue;
                                        // Reject collisions between classes.
                                        for (int c2 = 0; c2 < p && ok; ++c2)
                                            for (int c3 = c2 + 1; c3 < p && ok; ++c3)
                                                if (scalar_eq(radii[c2], radii[c3]))
                                                    ok = false;
                                        if (!ok) continue;
                                        if (auto wex =
                                                solve_at(tab, J, cls, conds, radii)) {
                                            samples.push_back(make_assignment(
                                                J, cls, radii, *wex));
                                            break;
                                        }
                                    }
                                }
                                if (samples.size() >= 3) {
                                    outcome.family = true;
                                    outcome.free_class = f;
                                    outcome.samples = std::move(samples);
                                    solved = true;
                                }
                            }
                        }

                        // Isolated radii: solve the full system numerically
                        // from many starts and confirm each root exactly.
                        if (!solved) {
                            NumericSystem sys;
                            sys.p = p;
                            sys.m = m;
                            sys.cls.assign(cls.begin(), cls.end());
                            sys.fixed_u.assign(p, BigFloat(1));
                            sys.u_free.assign(p, true);
                            sys.u_free[0] = false;
                            for (const auto& c : conds) {
                                std::vector<BigFloat> av;
                                BigFloat scale(0);
                                for (size_t i = 0; i < m; ++i) {
                                    BigFloat v = tab.ensure(c.l)[c.phi][J[i] - 1]
                                                     .to_bigfloat() *
                                                 BigFloat(tab.N[J[i] - 1]);
                                    av.push_back(v);
                                    scale += abs(v);
                                }
                                if (scale == 0) continue;
                                for (auto& v : av) v /= scale;
                                sys.a.push_back(std::move(av));
                                sys.powr.push_back(2 * c.j + c.l);
                            }
                            BigFloat target =
                                boost::multiprecision::pow(BigFloat(2), -130);
                            std::mt19937_64 rng(0xc2b2ae3d27d4eb4fULL);
                            std::uniform_real_distribution<double> du(-1.2, 1.2);
                            std::uniform_real_distribution<double> dw(-1.5, 2.0);
                            std::vector<std::vector<BigFloat>> found;
                            for (int start = 0; start < 16; ++start) {
                                std::vector<BigFloat> x0;
                                for (int c2 = 1; c2 < p; ++c2)
                                    x0.push_back(
                                        boost::multiprecision::exp(BigFloat(du(rng))));
                                for (size_t i = 1; i < m; ++i)
                                    x0.push_back(
                                        boost::multiprecision::exp(BigFloat(dw(rng))));
                                auto sol = newton_solve(sys, x0, target);
                                if (!sol) continue;
                                std::vector<BigFloat> u, w;
                                sys.unpack(*sol, u, w);
                                // Record every converged root first so later
                                // restarts landing in the same basin are
                                // dismissed cheaply, then filter boundary and
                                // degenerate ones.
                                bool dup = false;
                                for (const auto& prev : found) {
                                    BigFloat dist(0);
                                    for (int c2 = 1; c2 < p; ++c2)
                                        dist += abs(prev[c2 - 1] - u[c2]);
                                    if (dist < BigFloat(1) / 100000) dup = true;
                                }
                                if (dup) continue;
                                std::vector<BigFloat> key;
                                for (int c2 = 1; c2 < p; ++c2) key.push_back(u[c2]);
                                found.push_back(key);
                                bool ok = true;
                                BigFloat eps = BigFloat(1) / 1000000;
                                for (int c2 = 1; c2 < p; ++c2) {
                                    if (u[c2] < BigFloat(1) / 10000 || u[c2] > 10000)
                                        ok = false;
                                    if (abs(u[c2] - 1) < eps) ok = false;
                                    for (int c3 = 1; c3 < c2; ++c3)
                                        if (abs(u[c2] - u[c3]) < eps) ok = false;
                                }
                                for (size_t i = 0; i < m; ++i)
                                    if (w[i] < BigFloat(1) / 1000000000) ok = false;
                                if (!ok) continue;

                                std::vector<Scalar> radii(p);
                                radii[0] = Scalar(1);
                                bool exact_ok = true;
                                for (int c2 = 1; c2 < p; ++c2) {
                                    auto ex = exact_radius(u[c2]);
                                    if (!ex) {
                                        exact_ok = false;
                                        break;
                                    }
                                    radii[c2] = *ex;
                                }
                                if (exact_ok) {
                                    if (auto wex = solve_at(tab, J, cls, conds, radii)) {
                                        outcome.samples.push_back(
                                            make_assignment(J, cls, radii, *wex));
                                        solved = true;
                                        continue;
                                    }
                                }
                                // Numerically solid but not exactly confirmed:
                                // keep it, flagged for review.
                                ClassifiedDesign::Assignment a;
                                for (size_t i = 0; i < m; ++i) {
                                    a.radius2[J[i]] = Scalar(u[cls[i]] * u[cls[i]]);
                                    a.weight[J[i]] = Scalar(w[i]);
                                }
                                outcome.samples.push_back(std::move(a));
                                outcome.resolved = false;
                                solved = true;
                            }
                        }
                    }

                    if (!solved || outcome.samples.empty()) continue;
                    if (outcome.family) {
                        ClassifiedDesign row;
                        row.type = type;
                        row.n = n;
                        row.t = t;
                        row.J = J;
                        row.cls = cls;
                        row.family = true;
                        row.free_class = outcome.free_class;
                        row.samples = outcome.samples;
                        row.cardinality = card;
                        row.bound = card;
                        row.resolved = outcome.resolved;
                        rows.push_back(std::move(row));
                    } else {
                        // Each isolated solution is its own record.
                        for (auto& a : outcome.samples) {
                            ClassifiedDesign row;
                            row.type = type;
                            row.n = n;
                            row.t = t;
                            row.J = J;
                            row.cls = cls;
                            row.family = false;
                            row.samples = {a};
                            row.cardinality = card;
                            row.bound = card;
                            row.resolved = outcome.resolved;
                            rows.push_back(std::move(row));
                        }
                    }
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ClassifiedDesign& a,
                                           const ClassifiedDesign& b) {
        return std::tie(a.n, a.t, a.J, a.cls) < std::tie(b.n, b.t, b.J, b.cls);
    });
    return rows;
}

}  // namespace orbitdesigns
