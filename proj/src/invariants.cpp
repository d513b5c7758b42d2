#include "orbitdesigns/invariants.hpp"

#include <array>
#include <map>
#include <set>
#include <sstream>

namespace orbitdesigns {

namespace {

int type_index(GroupType t) { return static_cast<int>(t); }

// Orbit-sum of the monomial x_1^{p_1} x_2^{p_2} ... in n variables.  A
// pattern longer than n has no room and gives the zero polynomial.
MultiPoly msym(int n, const std::vector<int>& pattern) {
    if (static_cast<int>(pattern.size()) > n) return MultiPoly(n);
    Expo e(n, 0);
    for (size_t i = 0; i < pattern.size(); ++i) e[i] = pattern[i];
    return sym(MultiPoly::monomial(e));
}

struct BasicCache {
    int maxdeg = 1;
    std::vector<std::pair<int, MultiPoly>> list;
    std::vector<MultiPoly> lin, linpow;  // type A: simplex forms and powers
};

int max_basic_degree(GroupType type, int n) {
    switch (type) {
        case GroupType::A: return n + 1;
        case GroupType::B: return 2 * n;
        default: return std::max(2 * n - 2, n);
    }
}

void extend_basics(BasicCache& c, GroupType type, int n, int maxdeg) {
    maxdeg = std::min(maxdeg, max_basic_degree(type, n));
    if (maxdeg <= c.maxdeg) return;
    switch (type) {
        case GroupType::A: {
            if (c.lin.empty()) {
                ReflectionGroup G = build_group(type, n);
                Orbit simplex = corner_orbit(G, 1);  // n+1 points
                for (const Vec& u : simplex.points) {
                    MultiPoly form(n);
                    for (int j = 0; j < n; ++j)
                        form += MultiPoly::variable(n, j).scaled(u[j]);
                    c.lin.push_back(form);
                }
                c.linpow = c.lin;
            }
            for (int d = c.maxdeg + 1; d <= maxdeg; ++d) {
                MultiPoly p(n);
                for (size_t i = 0; i < c.lin.size(); ++i) {
                    c.linpow[i] *= c.lin[i];
                    p += c.linpow[i];
                }
                c.list.emplace_back(d, std::move(p));
            }
            break;
        }
        case GroupType::B:
        case GroupType::D: {
            int top = (type == GroupType::B) ? 2 * n : 2 * n - 2;
            for (int d = c.maxdeg + 1; d <= maxdeg; ++d) {
                std::vector<std::pair<int, MultiPoly>> add;
                if (d % 2 == 0 && d <= top) {
                    MultiPoly p(n);
                    for (int i = 0; i < n; ++i) {
                        Expo e(n, 0);
                        e[i] = d;
                        p.add_term(e, Scalar(1));
                    }
                    add.emplace_back(d, std::move(p));
                }
                if (type == GroupType::D && d == n) {
                    Expo e(n, 1);
                    add.emplace_back(d, MultiPoly::monomial(e));
                }
                for (auto& a : add) c.list.push_back(std::move(a));
            }
            break;
        }
    }
    c.maxdeg = maxdeg;
}

}  // namespace

const std::vector<std::pair<int, MultiPoly>>& basic_invariants(GroupType type,
                                                               int n, int maxdeg) {
    static std::map<std::pair<int, int>, BasicCache> cache;
    BasicCache& c = cache[{type_index(type), n}];
    extend_basics(c, type, n, maxdeg);
    return c.list;
}

const std::vector<MultiPoly>& invariant_harm_basis(const ReflectionGroup& G, int l) {
    static std::map<std::array<int, 3>, std::vector<MultiPoly>> cache;
    std::array<int, 3> key{type_index(G.type), G.n, l};
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    const int n = G.n;
    long long q = molien_dims(G, l)[l];
    std::vector<MultiPoly> basis;
    if (l == 0) {
        basis.push_back(MultiPoly::constant(n, Scalar(1)));
    } else if (q > 0) {
        // Span Hom_l^G by products of basic invariants, then intersect with
        // the kernel of the Laplacian.
        const auto& basics = basic_invariants(G.type, n, l);
        std::vector<int> degs;
        std::vector<const MultiPoly*> gens;
        for (const auto& [d, p] : basics)
            if (d <= l) {
                degs.push_back(d);
                gens.push_back(&p);
            }
        std::vector<std::vector<int>> combos;
        std::vector<int> cur(degs.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t pos, int rem) {
            if (pos == degs.size()) {
                if (rem == 0) combos.push_back(cur);
                return;
            }
            for (int c = 0; c * degs[pos] <= rem; ++c) {
                cur[pos] = c;
                rec(pos + 1, rem - c * degs[pos]);
            }
            cur[pos] = 0;
        };
        rec(0, l);

        std::vector<MultiPoly> Q;
        for (const auto& combo : combos) {
            MultiPoly prod = MultiPoly::constant(n, Scalar(1));
            for (size_t i = 0; i < combo.size(); ++i)
                for (int c = 0; c < combo[i]; ++c) prod *= *gens[i];
            Q.push_back(std::move(prod));
        }

        std::map<Expo, size_t, MonoOrder> rows;
        std::vector<MultiPoly> dQ;
        for (const MultiPoly& p : Q) {
            dQ.push_back(laplacian(p));
            for (const auto& [e, c] : dQ.back().terms()) rows.emplace(e, 0);
        }
        size_t r = 0;
        for (auto& [e, idx] : rows) idx = r++;
        Mat m(rows.size(), Vec(Q.size(), Scalar(0)));
        for (size_t j = 0; j < dQ.size(); ++j)
            for (const auto& [e, c] : dQ[j].terms()) m[rows.at(e)][j] = c;
        std::vector<Vec> kernel = nullspace(m, static_cast<int>(Q.size()));

        if (static_cast<long long>(kernel.size()) != q) {
            std::ostringstream os;
            os << "invariant harmonic basis for " << group_type_name(G.type) << n
               << " in degree " << l << ": kernel dimension " << kernel.size()
               << " does not match the Molien coefficient " << q;
            throw scalar_error(os.str());
        }

        std::vector<MultiPoly> raw;
        for (const Vec& c : kernel) {
            MultiPoly h(n);
            for (size_t i = 0; i < c.size(); ++i)
                if (!c[i].is_zero()) h += Q[i].scaled(c[i]);
            raw.push_back(std::move(h));
        }
        // Canonicalize: reduced row echelon form over the monomial
        // coefficients in the graded order, leading coefficients 1.
        std::map<Expo, size_t, MonoOrder> cols;
        for (const MultiPoly& h : raw)
            for (const auto& [e, c] : h.terms()) cols.emplace(e, 0);
        size_t cc = 0;
        for (auto& [e, idx] : cols) idx = cc++;
        Mat K(raw.size(), Vec(cols.size(), Scalar(0)));
        for (size_t i = 0; i < raw.size(); ++i)
            for (const auto& [e, c] : raw[i].terms()) K[i][cols.at(e)] = c;
        rref(K);
        std::vector<Expo> colex(cols.size());
        for (const auto& [e, idx] : cols) colex[idx] = e;
        for (const Vec& row : K) {
            MultiPoly h(n);
            for (size_t j = 0; j < row.size(); ++j)
                if (!row[j].is_zero()) h.add_term(colex[j], row[j]);
            if (!h.is_zero()) basis.push_back(std::move(h));
        }
        if (static_cast<long long>(basis.size()) != q)
            throw scalar_error("invariant harmonic basis reduction lost rank");
    }
    return cache.emplace(key, std::move(basis)).first->second;
}

MultiPoly reynolds(const ReflectionGroup& G, const MultiPoly& f, size_t cap) {
    std::vector<Mat> els = group_elements(G, cap);
    MultiPoly avg(G.n);
    for (const Mat& g : els) avg += act(g, f);
    return avg.scaled(Scalar(ratio(1, static_cast<long long>(els.size()))));
}

namespace {

Scalar rat(long long num, long long den = 1) { return Scalar(ratio(num, den)); }

void require(bool ok, GroupType type, int n, const std::string& label) {
    if (!ok)
        throw scalar_error("no closed form '" + label + "' for " +
                           group_type_name(type) + std::to_string(n));
}

// Type A pieces.  All coefficients live in Q(sqrt(n+1)).
MultiPoly a_f3(int n) {
    Scalar s = Scalar::sqrt_int(n + 1);
    if (n == 2)
        return msym(n, {3}) + msym(n, {2, 1}).scaled(rat(-3));
    if (n == 3)
        return msym(n, {3}) + msym(n, {1, 2}).scaled(rat(-3, 2)) +
               msym(n, {1, 1, 1}).scaled(rat(-3, 4));
    return msym(n, {3}) + msym(n, {1, 2}).scaled(rat(-3, n - 1)) +
           msym(n, {1, 1, 1})
               .scaled((rat(2) - s) * Scalar(ratio(6, (n - 1LL) * (n - 3))));
}

// The printed denominator n-2 in h_{4,1} cannot be harmonic under the
// orbit-sum convention used everywhere else; n-1 is (and is confirmed
// against the computed basis and the printed corner values).
MultiPoly a_h4(int n, int which) {
    switch (which) {
        case 1:
            return msym(n, {4}) + msym(n, {2, 2}).scaled(rat(-6, n - 1));
        case 2:
            return msym(n, {1, 1, 1, 1});
        default:
            return msym(n, {1, 3}) + msym(n, {1, 1, 2}).scaled(rat(-6, n - 2));
    }
}

MultiPoly a_f4(int n) {
    if (n == 3) return a_h4(3, 1) + a_h4(3, 3).scaled(rat(-20, 13));
    Scalar s = Scalar::sqrt_int(n + 1);
    long long N = n;
    long long cubic = N * N * N - 2 * N * N - 15 * N - 16;
    Scalar c42 = (rat(N * N - 5 * N - 12) + rat(4) * s)
                      * Scalar(ratio(24 * (N + 2), (N - 1) * (N - 2) * cubic));
    Scalar c43 = (rat(N * N - 2 * N - 7) - rat(N - 1) * s)
                      * Scalar(ratio(-4 * (N + 2), (N - 1) * cubic));
    return a_h4(n, 1) + a_h4(n, 2).scaled(c42) + a_h4(n, 3).scaled(c43);
}

MultiPoly a_h5(int n, int which) {
    switch (which) {
        case 1:
            return msym(n, {5}) + msym(n, {2, 3}).scaled(rat(-10, n - 1)) +
                   msym(n, {1, 2, 2}).scaled(rat(30, (n - 1LL) * (n - 2)));
        case 2:
            return msym(n, {5}) + msym(n, {2, 3}).scaled(rat(-10, n - 1)) +
                   msym(n, {1, 4}).scaled(rat(5, n - 1));
        case 3:
            return msym(n, {1, 1, 3}) + msym(n, {1, 1, 1, 2}).scaled(rat(-9, n - 3));
        default:
            return msym(n, {1, 1, 1, 1, 1});
    }
}

MultiPoly a_f5(int n) {
    if (n == 4) {
        Scalar s5 = Scalar::sqrt_int(5);
        Scalar c2 = (rat(17) - rat(20) * s5) * Scalar(ratio(1, 58));
        Scalar c3 = (rat(18) + s5) * Scalar(ratio(10, 87));
        return a_h5(4, 1) + a_h5(4, 2).scaled(c2) + a_h5(4, 3).scaled(c3);
    }
    Scalar s = Scalar::sqrt_int(n + 1);
    long long N = n;
    long long den = 4 * N * N * N + 3 * N * N - 60 * N - 180;
    Scalar c52 = (rat(2 * N * N * N + 5 * N * N - 21 * N - 90) -
                  rat(N * (N + 6)) * s)
                      * Scalar(ratio(-1, den));
    Scalar c53 = (rat(2 * N * N * N + 6 * N * N - 32 * N - 168) +
                  rat(N * N - 8 * N + 12) * s)
                      * Scalar(ratio(20, (N - 1) * (N - 2) * den));
    Scalar c54 = (rat(N * N - 11 * N - 78) + rat(2 * N * N - 2 * N + 12) * s)
                      * Scalar(ratio(-120 * (N + 6),
                                  (N - 1) * (N - 2) * (N - 3) * den));
    return a_h5(n, 1) + a_h5(n, 2).scaled(c52) + a_h5(n, 3).scaled(c53) +
           a_h5(n, 4).scaled(c54);
}

// Types B and D share the even closed forms.
MultiPoly bd_f4(int n) {
    return msym(n, {4}) + msym(n, {2, 2}).scaled(rat(-6, n - 1));
}

MultiPoly bd_f6(int n) {
    return msym(n, {6}) + msym(n, {2, 4}).scaled(rat(-15, n - 1)) +
           msym(n, {2, 2, 2}).scaled(rat(180, (n - 1LL) * (n - 2)));
}

MultiPoly bd_f8(int n) {
    return msym(n, {8}) + msym(n, {2, 6}).scaled(rat(-28, n - 1)) +
           msym(n, {4, 4}).scaled(rat(70, n - 1));
}

}  // namespace

MultiPoly closed_form_invariant(GroupType type, int n, const std::string& label) {
    switch (type) {
        case GroupType::A:
            if (label == "f3") { require(n >= 2, type, n, label); return a_f3(n); }
            if (label == "f4") { require(n >= 3, type, n, label); return a_f4(n); }
            if (label == "f5") { require(n >= 4, type, n, label); return a_f5(n); }
            if (label == "h4_1") { require(n >= 2, type, n, label); return a_h4(n, 1); }
            if (label == "h4_2") { require(n >= 4, type, n, label); return a_h4(n, 2); }
            if (label == "h4_3") { require(n >= 3, type, n, label); return a_h4(n, 3); }
            if (label == "h5_1") { require(n >= 3, type, n, label); return a_h5(n, 1); }
            if (label == "h5_2") { require(n >= 2, type, n, label); return a_h5(n, 2); }
            if (label == "h5_3") { require(n >= 4, type, n, label); return a_h5(n, 3); }
            if (label == "h5_4") { require(n >= 5, type, n, label); return a_h5(n, 4); }
            if (label == "obstruction6") {
                require(n >= 2, type, n, label);
                return msym(n, {1, 5}) + msym(n, {3, 3}).scaled(rat(-10, 3));
            }
            break;
        case GroupType::B:
            if (label == "f4") { require(n >= 2, type, n, label); return bd_f4(n); }
            if (label == "f6") { require(n >= 3, type, n, label); return bd_f6(n); }
            if (label == "f8") { require(n >= 2, type, n, label); return bd_f8(n); }
            break;
        case GroupType::D:
            if (label == "f4") { require(n >= 4, type, n, label); return bd_f4(n); }
            if (label == "f6") { require(n >= 4, type, n, label); return bd_f6(n); }
            if (label == "f8") { require(n >= 4, type, n, label); return bd_f8(n); }
            if (label == "f4_2") { require(n == 4, type, n, label); return msym(n, {1, 1, 1, 1}); }
            if (label == "f5") { require(n == 5, type, n, label); return msym(n, {1, 1, 1, 1, 1}); }
            if (label == "f6_2") { require(n == 6, type, n, label); return msym(n, {1, 1, 1, 1, 1, 1}); }
            break;
    }
    throw scalar_error("no closed form '" + label + "' for " +
                       group_type_name(type) + std::to_string(n));
}

std::vector<std::string> closed_form_labels(GroupType type, int n, int degree) {
    std::vector<std::string> out;
    auto try_add = [&](const std::string& label) {
        try {
            MultiPoly f = closed_form_invariant(type, n, label);
            if (f.degree() == degree) out.push_back(label);
        } catch (const scalar_error&) {
        }
    };
    switch (type) {
        case GroupType::A:
            for (const char* l :
                 {"f3", "f4", "f5", "h4_1", "h4_2", "h4_3", "h5_1", "h5_2", "h5_3",
                  "h5_4", "obstruction6"})
                try_add(l);
            break;
        case GroupType::B:
            for (const char* l : {"f4", "f6", "f8"}) try_add(l);
            break;
        case GroupType::D:
            for (const char* l : {"f4", "f6", "f8", "f4_2", "f5", "f6_2"}) try_add(l);
            break;
    }
    return out;
}

namespace {

Scalar b_corner_value(int n, int k, const std::string& label) {
    Rational km1(k - 1), nm1(n - 1);
    if (label == "f4") {
        Rational v = (Rational(1) - Rational(3) * km1 / nm1) / Rational(k);
        return Scalar(v);
    }
    if (label == "f6") {
        Rational v = (Rational(1) - Rational(15) * km1 / nm1 +
                      Rational(30) * km1 * Rational(k - 2) / (nm1 * Rational(n - 2))) /
                     Rational(static_cast<long long>(k) * k);
        return Scalar(v);
    }
    if (label == "f8") {
        Rational v = (Rational(1) + Rational(7) * km1 / nm1) /
                     Rational(static_cast<long long>(k) * k * k);
        return Scalar(v);
    }
    throw scalar_error("no printed corner value for label '" + label + "'");
}

Scalar a_corner_value(int n, int k, const std::string& label) {
    BigFloat nb(n), kb(k);
    BigFloat s = sqrt(BigFloat(n + 1));
    BigFloat scale = nb + 2 + 2 * s;  // n + 2 + 2 sqrt(n+1)
    if (label == "f3") {
        if (n == 3) {
            if (k == 1) return rat(729, 4);
            if (k == 2) return rat(0);
            return rat(-729, 4);
        }
        BigFloat phi3 =
            2 * (nb * nb * nb + 3 * nb * nb - 12 * nb - 16 +
                 (3 * nb * nb - 4 * nb - 16) * s) /
            ((nb - 1) * (nb - 3) * scale * sqrt(scale));
        return Scalar(-(kb - BigFloat(n + 1) / 2) / sqrt(kb * (nb + 1 - kb)) * phi3);
    }
    if (label == "f4") {
        BigFloat root = sqrt(BigFloat(3) * (nb * nb - 1)) / 6;
        BigFloat alpha = BigFloat(n + 1) / 2 - root, beta = BigFloat(n + 1) / 2 + root;
        BigFloat phi4 =
            6 * (nb + 1) *
            (pow(nb, 5) + 7 * pow(nb, 4) - 24 * pow(nb, 3) - 160 * nb * nb - 256 * nb -
             128 + 4 * (pow(nb, 4) - 20 * nb * nb - 48 * nb - 32) * s) /
            ((nb - 1) * (nb - 2) * (nb * nb * nb - 2 * nb * nb - 15 * nb - 16) *
             scale * scale);
        return Scalar((kb - alpha) * (kb - beta) / (kb * (nb + 1 - kb)) * phi4);
    }
    if (label == "f5") {
        BigFloat root = sqrt(BigFloat(3) * (nb + 1) * (2 * nb - 3)) / 6;
        BigFloat ap = BigFloat(n + 1) / 2 - root, bp = BigFloat(n + 1) / 2 + root;
        BigFloat phi5 =
            24 * (nb + 1) *
            (2 * pow(nb, 6) + 31 * pow(nb, 5) + 50 * pow(nb, 4) - 448 * pow(nb, 3) -
             2144 * nb * nb - 3200 * nb - 1536 +
             (11 * pow(nb, 5) + 50 * pow(nb, 4) - 96 * pow(nb, 3) - 1120 * nb * nb -
              2432 * nb - 1536) * s) /
            ((nb - 1) * (nb - 2) * (nb - 3) *
             (4 * pow(nb, 3) + 3 * nb * nb - 60 * nb - 180) * scale * scale * sqrt(scale));
        BigFloat m = kb * (nb + 1 - kb);
        return Scalar(-(kb - BigFloat(n + 1) / 2) * (kb - ap) * (kb - bp) /
                      (m * sqrt(m)) * phi5);
    }
    throw scalar_error("no printed corner value for label '" + label + "'");
}

}  // namespace

Scalar corner_value(GroupType type, int n, int k, const std::string& label) {
    if (k < 1 || k > n) throw scalar_error("corner index out of range");
    switch (type) {
        case GroupType::A: {
            bool ok = (label == "f3" && n >= 2) || (label == "f4" && n >= 3) ||
                      (label == "f5" && n >= 4);
            require(ok, type, n, label);
            return a_corner_value(n, k, label);
        }
        case GroupType::B: {
            bool ok = (label == "f4" && n >= 2) || (label == "f6" && n >= 3) ||
                      (label == "f8" && n >= 2);
            require(ok, type, n, label);
            return b_corner_value(n, k, label);
        }
        case GroupType::D: {
            if (label == "f4") {
                require(n >= 4, type, n, label);
                return k <= n - 2 ? b_corner_value(n, k, label) : rat(-2, n);
            }
            if (label == "f6") {
                require(n >= 4, type, n, label);
                return k <= n - 2 ? b_corner_value(n, k, label)
                                  : rat(16, static_cast<long long>(n) * n);
            }
            if (label == "f8") {
                require(n >= 4, type, n, label);
                return k <= n - 2 ? b_corner_value(n, k, label)
                                  : rat(8, static_cast<long long>(n) * n * n);
            }
            if (label == "f4_2") {
                require(n == 4, type, n, label);
                return k == 3 ? rat(-1, 16) : (k == 4 ? rat(1, 16) : rat(0));
            }
            if (label == "f5") {
                require(n == 5, type, n, label);
                if (k == 4) return Scalar(Rational(0), Rational(-1, 125), 5);
                if (k == 5) return Scalar(Rational(0), Rational(1, 125), 5);
                return rat(0);
            }
            if (label == "f6_2") {
                require(n == 6, type, n, label);
                return k == 5 ? rat(-1, 216) : (k == 6 ? rat(1, 216) : rat(0));
            }
            break;
        }
    }
    throw scalar_error("no printed corner value for label '" + label + "'");
}

RadicalSum corner_eval_exact(GroupType type, int n, int k, const MultiPoly& phi) {
    if (k < 1 || k > n) throw scalar_error("corner index out of range");
    if (phi.is_zero()) return RadicalSum(Rational(0));
    if (!phi.homogeneous())
        throw scalar_error("corner_eval_exact requires a homogeneous polynomial");
    const CornerVector cv = corner_vectors(type, n)[k - 1];
    const int l = phi.degree();
    Scalar val = phi.evaluate(cv.scaled);
    const Scalar& S = cv.scaled_norm2;
    if (l % 2 == 0) return RadicalSum(val * S.pow(l / 2).inverse());
    // Odd degree: multiply by sqrt(S)/S^((l+1)/2).
    RadicalSum rootS(Rational(0));
    if (type == GroupType::A) {
        // S = m (1 + sqrt(n+1))^2 with m = k(n+1-k).
        long long m = static_cast<long long>(k) * (n + 1 - k);
        rootS = RadicalSum(Scalar(1) + Scalar::sqrt_int(n + 1)) *
                RadicalSum::sqrt_of(Rational(m));
    } else {
        rootS = RadicalSum::sqrt_of(S.rational());
    }
    return RadicalSum(val * S.pow((l + 1) / 2).inverse()) * rootS;
}

}  // namespace orbitdesigns
