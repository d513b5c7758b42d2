#include "orbitdesigns/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

namespace orbitdesigns {

GroupType parse_group_type(const std::string& s) {
    if (s == "A" || s == "a") return GroupType::A;
    if (s == "B" || s == "b") return GroupType::B;
    if (s == "D" || s == "d") return GroupType::D;
    throw scalar_error("unknown group type '" + s + "' (expected A, B or D)");
}

std::string group_type_name(GroupType t) {
    switch (t) {
        case GroupType::A: return "A";
        case GroupType::B: return "B";
        default: return "D";
    }
}

int min_rank(GroupType t) { return t == GroupType::D ? 4 : 2; }

namespace {

void check_rank(GroupType type, int n) {
    if (n < min_rank(type))
        throw scalar_error("rank " + std::to_string(n) + " too small for type " +
                           group_type_name(type));
    if (n > static_cast<int>(Config::orbit_rank_cap()))
        throw scalar_error("rank " + std::to_string(n) + " exceeds the rank cap " +
                           std::to_string(Config::orbit_rank_cap()));
}

// r(alpha) = I - alpha alpha^T for |alpha|^2 = 2.
Mat reflection(const Vec& alpha) {
    const int n = static_cast<int>(alpha.size());
    Mat r = mat_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = r[i][j] - alpha[i] * alpha[j];
    return r;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            int c = a[i].cmp(b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    }
};

struct MatLess {
    bool operator()(const Mat& a, const Mat& b) const {
        VecLess vl;
        for (size_t i = 0; i < a.size(); ++i) {
            if (vl(a[i], b[i])) return true;
            if (vl(b[i], a[i])) return false;
        }
        return false;
    }
};

}  // namespace

ReflectionGroup build_group(GroupType type, int n) {
    check_rank(type, n);
    ReflectionGroup G;
    G.type = type;
    G.n = n;

    auto chain_root = [&](int i) {  // e_i - e_{i+1}, 0-based i
        Vec a(n, Scalar(0));
        a[i] = Scalar(1);
        a[i + 1] = Scalar(-1);
        return a;
    };
    for (int i = 0; i + 1 < n; ++i) G.roots.push_back(chain_root(i));

    switch (type) {
        case GroupType::A: {
            // alpha_n = (a, ..., a, b) with a = (-1+sqrt(n+1))/n,
            // b = (n-1+sqrt(n+1))/n; the simple system of A_n realized in R^n.
            Scalar s = Scalar::sqrt_int(n + 1);
            Scalar a = (s - Scalar(1)) / Scalar(n);
            Scalar b = (s + Scalar(n - 1)) / Scalar(n);
            Vec alpha(n, a);
            alpha[n - 1] = b;
            G.roots.push_back(alpha);
            for (int i = 1; i <= n; ++i) G.exponents.push_back(i);
            G.order = factorial(n + 1);
            break;
        }
        case GroupType::B: {
            Vec alpha(n, Scalar(0));
            alpha[n - 1] = Scalar::sqrt_int(2);
            G.roots.push_back(alpha);
            for (int i = 1; i <= n; ++i) G.exponents.push_back(2 * i - 1);
            G.order = factorial(n) * (1LL << n);
            break;
        }
        case GroupType::D: {
            Vec alpha(n, Scalar(0));
            alpha[n - 2] = Scalar(1);
            alpha[n - 1] = Scalar(1);
            G.roots.push_back(alpha);
            for (int i = 1; i + 1 <= n; ++i) G.exponents.push_back(2 * i - 1);
            G.exponents.push_back(n - 1);
            std::sort(G.exponents.begin(), G.exponents.end());
            G.order = factorial(n) * (1LL << (n - 1));
            break;
        }
    }
    for (const Vec& alpha : G.roots) {
        if (dot(alpha, alpha) != Scalar(2))
            throw scalar_error("internal: root without squared norm 2");
        G.generators.push_back(reflection(alpha));
    }
    return G;
}

std::vector<CornerVector> corner_vectors(GroupType type, int n) {
    check_rank(type, n);
    std::vector<CornerVector> out;
    for (int k = 1; k <= n; ++k) {
        CornerVector cv;
        cv.k = k;
        switch (type) {
            case GroupType::A: {
                // Scaled form: k coordinates n+1-k+sqrt(n+1), the rest -k.
                Scalar s = Scalar::sqrt_int(n + 1);
                Scalar hi = Scalar(n + 1 - k) + s;
                cv.scaled.assign(n, Scalar(-k));
                for (int i = 0; i < k; ++i) cv.scaled[i] = hi;
                cv.scaled_norm2 =
                    Scalar(k * (n + 1 - k)) * (Scalar(n + 2) + Scalar(2) * s);
                break;
            }
            case GroupType::B: {
                cv.scaled.assign(n, Scalar(0));
                for (int i = 0; i < k; ++i) cv.scaled[i] = Scalar(1);
                cv.scaled_norm2 = Scalar(k);
                break;
            }
            case GroupType::D: {
                if (k <= n - 2) {
                    cv.scaled.assign(n, Scalar(0));
                    for (int i = 0; i < k; ++i) cv.scaled[i] = Scalar(1);
                    cv.scaled_norm2 = Scalar(k);
                } else {
                    cv.scaled.assign(n, Scalar(1));
                    if (k == n - 1) cv.scaled[n - 1] = Scalar(-1);
                    cv.scaled_norm2 = Scalar(n);
                }
                break;
            }
        }
        if (auto nrm = cv.scaled_norm2.try_sqrt()) {
            Scalar inv = nrm->inverse();
            cv.unit.reserve(n);
            for (const Scalar& c : cv.scaled) cv.unit.push_back(c * inv);
            cv.unit_exact = true;
        } else {
            BigFloat fnrm = sqrt(cv.scaled_norm2.to_bigfloat());
            for (const Scalar& c : cv.scaled)
                cv.unit.push_back(Scalar(c.to_bigfloat() / fnrm));
            cv.unit_exact = false;
        }
        out.push_back(std::move(cv));
    }
    return out;
}

Orbit orbit(const ReflectionGroup& G, const Vec& x) {
    if (static_cast<int>(x.size()) != G.n)
        throw scalar_error("orbit: vector dimension does not match the rank");
    bool exact = true;
    for (const Scalar& c : x) exact = exact && c.is_exact();
    const size_t cap = static_cast<size_t>(G.order);

    Orbit o;
    o.rep = x;
    o.norm2 = dot(x, x);

    if (exact) {
        std::set<Vec, VecLess> seen;
        std::vector<Vec> frontier{x};
        seen.insert(x);
        while (!frontier.empty()) {
            std::vector<Vec> next;
            for (const Vec& p : frontier)
                for (const Mat& g : G.generators) {
                    Vec q = mat_apply(g, p);
                    if (seen.insert(q).second) {
                        if (seen.size() > cap)
                            throw scalar_error("orbit closure exceeded the group order");
                        next.push_back(std::move(q));
                    }
                }
            frontier = std::move(next);
        }
        o.points.assign(seen.begin(), seen.end());
        return o;
    }

    // Bigfloat coordinates: deduplicate via tolerance-sized buckets.  Points
    // within tol of a seen point are treated as equal; a boundary straddle
    // would inflate the closure past |G| and is reported as such.
    BigFloat tol = Config::tolerance();
    auto key_of = [&](const Vec& p) {
        std::vector<Integer> key;
        for (const Scalar& c : p) {
            BigFloat q = floor(c.to_bigfloat() / (tol * 16) + BigFloat(0.5));
            key.push_back(Integer(q));
        }
        return key;
    };
    auto close = [&](const Vec& a, const Vec& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (abs(a[i].to_bigfloat() - b[i].to_bigfloat()) > tol * 8) return false;
        return true;
    };
    std::map<std::vector<Integer>, std::vector<size_t>> buckets;
    std::vector<Vec> pts{x};
    buckets[key_of(x)].push_back(0);
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t idx : frontier)
            for (const Mat& g : G.generators) {
                Vec q = mat_apply(g, pts[idx]);
                auto key = key_of(q);
                bool dup = false;
                for (size_t j : buckets[key])
                    if (close(pts[j], q)) { dup = true; break; }
                if (dup) continue;
                pts.push_back(q);
                if (pts.size() > cap)
                    throw scalar_error(
                        "orbit closure exceeded the group order "
                        "(increase the precision or use exact coordinates)");
                buckets[key].push_back(pts.size() - 1);
                next.push_back(pts.size() - 1);
            }
        frontier = std::move(next);
    }
    o.points = std::move(pts);
    std::sort(o.points.begin(), o.points.end(), VecLess{});
    return o;
}

Orbit corner_orbit(const ReflectionGroup& G, int k) {
    if (k < 1 || k > G.n) throw scalar_error("corner index out of range");
    // Corner orbits are exact and reused heavily (every orbit design and
    // every classification probe regenerates them), so memoize per (type,n,k).
    static std::map<std::tuple<GroupType, int, int>, Orbit> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(G.type, G.n, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Orbit o = orbit(G, corner_vectors(G.type, G.n)[k - 1].scaled);
        it = cache.emplace(key, std::move(o)).first;
    }
    return it->second;
}

long long corner_orbit_size(GroupType type, int n, int k) {
    if (k < 1 || k > n) throw scalar_error("corner index out of range");
    switch (type) {
        case GroupType::A: return binomial(n + 1, k);
        case GroupType::B: return binomial(n, k) << k;
        default:
            if (k <= n - 2) return binomial(n, k) << k;
            return 1LL << (n - 1);
    }
}

std::vector<long long> molien_dims(const ReflectionGroup& G, int lmax) {
    if (lmax < 0) throw scalar_error("molien_dims: negative degree");
    std::vector<long long> q(lmax + 1, 0);
    q[0] = 1;
    for (size_t i = 1; i < G.exponents.size(); ++i) {
        int d = G.exponents[i] + 1;
        for (int l = d; l <= lmax; ++l) q[l] += q[l - d];
    }
    return q;
}

std::vector<Mat> group_elements(const ReflectionGroup& G, size_t cap) {
    std::set<Mat, MatLess> seen;
    std::vector<Mat> frontier{mat_identity(G.n)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& m : frontier)
            for (const Mat& g : G.generators) {
                Mat h = mat_mul(g, m);
                if (seen.insert(h).second) {
                    if (seen.size() > cap)
                        throw scalar_error("group closure exceeded the cap");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace orbitdesigns
