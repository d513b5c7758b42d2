#include "orbitdesigns/xu.hpp"

#include "orbitdesigns/jsonio.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace orbitdesigns {

namespace {

constexpr double kTol = 1e-12;          // pass threshold for reports
const char* kSolveTol = "1e-13";        // documented solver target (relative)

BigFloat big_pi() {
    Config::ensure();
    return atan(BigFloat(1)) * 4;
}

Integer double_factorial(int k) {       // (-1)!! = 0!! = 1
    Integer v(1);
    for (int i = k; i >= 2; i -= 2) v *= i;
    return v;
}

BigFloat mu_bf(const RadialWeight& W, int j) { return W.mu(j).to_bigfloat(); }

// r^p for s = r^2 (p/2 integer or half-integer power of s).
BigFloat pow_half(const BigFloat& s, int p) {
    BigFloat v = pow(s, p / 2);
    if (p % 2) v *= sqrt(s);
    return v;
}

struct Shape {
    int circles = 0;
    bool center = false;
    int moment_max = 0;            // moment equations j = 0..moment_max
    std::vector<int> alt_j;        // alternating labels
    std::vector<int> alt_power;    // power of r in each alternating row
    int unknowns = 0;
    int equations = 0;
};

Shape shape_of(XuFamily family, int n) {
    if (n < 2) throw xu_solve_error("the construction requires n >= 2");
    Shape s;
    if (family == XuFamily::odd_degree) {
        s.circles = n / 2;
        s.center = (n % 2 == 1);
        s.moment_max = n - 1;
        for (int j = (n + 3) / 2; j <= n - 1; ++j) {
            s.alt_j.push_back(j);
            s.alt_power.push_back(2 * j);
        }
    } else {
        s.circles = n / 2 + 1;
        s.moment_max = n;
        for (int j = (n + 1) / 2; j <= n - 1; ++j) {
            s.alt_j.push_back(j);
            s.alt_power.push_back(2 * j + 1);
        }
    }
    s.unknowns = 2 * s.circles + (s.center ? 1 : 0);
    s.equations = s.moment_max + 1 + static_cast<int>(s.alt_j.size());
    return s;
}

int m_of(XuFamily family, int n) {
    return family == XuFamily::odd_degree ? n / 2 : (n + 1) / 2;
}

// Gaussian elimination with partial pivoting; A is square.
std::vector<BigFloat> solve_dense_bf(std::vector<std::vector<BigFloat>> A,
                                     std::vector<BigFloat> b) {
    const size_t n = A.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[p][c])) p = r;
        if (A[p][c] == 0) throw xu_solve_error("singular linear system");
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (size_t r = c + 1; r < n; ++r) {
            BigFloat f = A[r][c] / A[c][c];
            if (f == 0) continue;
            for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<BigFloat> x(n, BigFloat(0));
    for (size_t i = n; i-- > 0;) {
        BigFloat acc = b[i];
        for (size_t k = i + 1; k < n; ++k) acc -= A[i][k] * x[k];
        x[i] = acc / A[i][i];
    }
    return x;
}

// k-point Gauss rule for the measure with moments M(j) = mu(j) in s = r^2:
// nodes are the roots of the monic degree-k orthogonal polynomial.
struct GaussRule {
    std::vector<BigFloat> s, w;
};

GaussRule gauss_rule(const RadialWeight& W, int k) {
    std::vector<BigFloat> M(2 * k);
    for (int j = 0; j < 2 * k; ++j) M[j] = mu_bf(W, j);

    std::vector<BigFloat> coef;    // p(s) = s^k + sum coef[j] s^j
    if (k == 1) {
        coef = {-M[1] / M[0]};
    } else {
        std::vector<std::vector<BigFloat>> A(k, std::vector<BigFloat>(k));
        std::vector<BigFloat> rhs(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) A[i][j] = M[i + j];
            rhs[i] = -M[k + i];
        }
        coef = solve_dense_bf(std::move(A), std::move(rhs));
    }
    auto p = [&](const BigFloat& x) {
        BigFloat acc(1);
        for (int j = k - 1; j >= 0; --j) acc = acc * x + coef[j];
        return acc;
    };

    BigFloat bound(1);
    for (const BigFloat& c : coef) bound = std::max(bound, BigFloat(abs(c)));
    bound = bound * 2 + 1;

    std::vector<std::pair<BigFloat, BigFloat>> brackets;
    for (int grid = 512; grid <= 512 * 64 && (int)brackets.size() < k; grid *= 4) {
        brackets.clear();
        BigFloat prev_x(0), prev_v = p(prev_x);
        for (int i = 1; i <= grid; ++i) {
            BigFloat x = bound * i / grid;
            BigFloat v = p(x);
            if ((prev_v < 0) != (v < 0)) brackets.emplace_back(prev_x, x);
            prev_x = x;
            prev_v = v;
        }
    }
    if ((int)brackets.size() != k)
        throw xu_solve_error("could not isolate the Gauss nodes used for seeding");

    GaussRule g;
    for (auto& [a, b] : brackets) {
        BigFloat lo = a, hi = b, flo = p(lo);
        for (int it = 0; it < 360; ++it) {
            BigFloat mid = (lo + hi) / 2;
            BigFloat fm = p(mid);
            if ((flo < 0) == (fm < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        g.s.push_back((lo + hi) / 2);
    }
    std::sort(g.s.begin(), g.s.end());

    std::vector<std::vector<BigFloat>> V(k, std::vector<BigFloat>(k));
    std::vector<BigFloat> rhs(k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) V[j][i] = pow(g.s[i], j);
        rhs[j] = M[j];
    }
    g.w = solve_dense_bf(std::move(V), std::move(rhs));
    return g;
}

struct NlRow {
    bool alt = false;
    int power = 0;           // power of r (even: moment; alternating may be odd)
    BigFloat target, scale;
};

double rel_inf_norm(const std::vector<BigFloat>& v) {
    BigFloat m(0);
    for (const auto& x : v) m = std::max(m, BigFloat(abs(x)));
    return m.convert_to<double>();
}

}  // namespace

// ---------------------------------------------------------------------------
// RadialWeight
// ---------------------------------------------------------------------------

RadialWeight RadialWeight::gaussian() {
    RadialWeight w;
    w.name = "gaussian";
    w.mu = [](int j) {
        if (j < 0) throw scalar_error("mu: negative index");
        Rational f(1);
        for (int i = 2; i <= j; ++i) f *= i;
        f /= 2;
        return Scalar(f);
    };
    return w;
}

RadialWeight RadialWeight::unit_disk() {
    RadialWeight w;
    w.name = "unit_disk";
    w.mu = [](int j) {
        if (j < 0) throw scalar_error("mu: negative index");
        return Scalar(ratio(1, 2 * j + 2));
    };
    return w;
}

RadialWeight RadialWeight::custom(std::vector<Scalar> moments) {
    for (const Scalar& m : moments)
        if (!(m > Scalar(0))) throw scalar_error("custom weight: moments must be positive");
    RadialWeight w;
    w.name = "custom";
    w.mu = [moments = std::move(moments)](int j) {
        if (j < 0 || j >= static_cast<int>(moments.size()))
            throw scalar_error("custom weight: moment index " + std::to_string(j) +
                               " outside the supplied list");
        return moments[j];
    };
    return w;
}

// ---------------------------------------------------------------------------
// XuFormula geometry
// ---------------------------------------------------------------------------

XuFamily parse_xu_family(const std::string& s) {
    if (s == "odd") return XuFamily::odd_degree;
    if (s == "even") return XuFamily::even_degree;
    throw scalar_error("unknown family '" + s + "' (expected odd or even)");
}

std::string xu_family_name(XuFamily f) {
    return f == XuFamily::odd_degree ? "odd" : "even";
}

int XuFormula::angle_count() const {
    if (family == XuFamily::odd_degree) return n % 2 == 0 ? 2 * m + 2 : 2 * m + 4;
    return 2 * m + 1;
}

bool XuFormula::has_center() const {
    return family == XuFamily::odd_degree && n % 2 == 1;
}

int XuFormula::degree() const {
    return family == XuFamily::odd_degree ? 2 * n - 1 : 2 * n;
}

XuFormula make_xu_formula(XuFamily family, int n, std::vector<Scalar> lambda,
                          std::vector<Scalar> r, std::optional<Scalar> lambda0) {
    Shape sh = shape_of(family, n);
    if (static_cast<int>(lambda.size()) != sh.circles ||
        static_cast<int>(r.size()) != sh.circles)
        throw scalar_error("formula needs " + std::to_string(sh.circles) +
                           " circles for n=" + std::to_string(n));
    for (const Scalar& v : lambda)
        if (!(v > Scalar(0))) throw scalar_error("lambda entries must be positive");
    for (const Scalar& v : r)
        if (!(v > Scalar(0))) throw scalar_error("radii must be positive");
    if (lambda0 && !sh.center)
        throw scalar_error("lambda0 is only allowed for the odd family with odd n");
    if (lambda0 && *lambda0 < Scalar(0))
        throw scalar_error("lambda0 must be nonnegative");

    XuFormula F;
    F.family = family;
    F.n = n;
    F.m = m_of(family, n);
    F.lambda = std::move(lambda);
    F.r = std::move(r);
    F.lambda0 = std::move(lambda0);
    for (int i = 1; i <= sh.circles; ++i) F.sigma.push_back((F.m + i) % 2);
    return F;
}

std::vector<XuPoint> build_points(const XuFormula& F) {
    const BigFloat pi = big_pi();
    const int N = F.angle_count();
    std::vector<XuPoint> pts;
    for (int i = 0; i < F.circles(); ++i) {
        BigFloat ri = F.r[i].to_bigfloat();
        BigFloat wi = 2 * pi * F.lambda[i].to_bigfloat() / N;
        for (int j = 0; j < N; ++j) {
            BigFloat ang = BigFloat(2 * j + F.sigma[i]) * pi / N;
            pts.push_back({ri * cos(ang), ri * sin(ang), wi});
        }
    }
    if (F.has_center())
        pts.push_back({BigFloat(0), BigFloat(0),
                       F.lambda0 ? F.lambda0->to_bigfloat() : BigFloat(0)});
    return pts;
}

// ---------------------------------------------------------------------------
// Condition system
// ---------------------------------------------------------------------------

XuConditionReport verify_conditions(const XuFormula& F, const RadialWeight& W) {
    Config::ensure();
    const Shape sh = shape_of(F.family, F.n);
    const BigFloat two_pi = 2 * big_pi();
    std::vector<BigFloat> lam, s;
    for (const Scalar& v : F.lambda) lam.push_back(v.to_bigfloat());
    for (const Scalar& v : F.r) s.push_back(v.to_bigfloat() * v.to_bigfloat());

    XuConditionReport rep;
    auto push = [&](std::string kind, int j, bool extra, const BigFloat& lhs,
                    const BigFloat& rhs, const BigFloat& scale) {
        BigFloat sc = scale > 0 ? scale : BigFloat(1);
        double res = BigFloat(abs(lhs - rhs) / sc).convert_to<double>();
        XuConditionRow row{std::move(kind), j, extra, res, res <= kTol};
        rep.max_residual = std::max(rep.max_residual, res);
        rep.rows.push_back(std::move(row));
    };

    for (int j = 0; j <= sh.moment_max; ++j) {
        BigFloat lhs(0);
        for (int i = 0; i < sh.circles; ++i) lhs += lam[i] * pow(s[i], j);
        if (j == 0 && F.has_center() && F.lambda0)
            lhs += F.lambda0->to_bigfloat() / two_pi;
        BigFloat rhs = mu_bf(W, j);
        push("moment", j, j == 0, lhs, rhs, rhs);
    }
    for (size_t a = 0; a < sh.alt_j.size(); ++a) {
        const int p = sh.alt_power[a];
        BigFloat lhs(0), mag(0);
        for (int i = 0; i < sh.circles; ++i) {
            BigFloat term = lam[i] * pow_half(s[i], p);
            lhs += (i % 2 == 0 ? -term : term);   // (-1)^i with i starting at 1
            mag += term;
        }
        push("alternating", sh.alt_j[a], false, lhs, BigFloat(0), mag);
    }
    rep.pass = true;
    for (const auto& row : rep.rows) rep.pass = rep.pass && row.ok;
    return rep;
}

XuFormula solve_moment_system(const RadialWeight& W, int n, XuFamily family) {
    Config::ensure();
    const Shape sh = shape_of(family, n);
    if (sh.unknowns != sh.equations)
        throw xu_solve_error(
            "no square condition system for family '" + xu_family_name(family) +
            "', n=" + std::to_string(n) + ": " + std::to_string(sh.unknowns) +
            " unknowns vs " + std::to_string(sh.equations) +
            " equations; the theorem characterizes such formulas but this shape "
            "admits none for a generic weight");

    const int k = sh.circles;
    std::vector<NlRow> rows;
    for (int j = sh.center ? 1 : 0; j <= sh.moment_max; ++j)
        rows.push_back({false, 2 * j, mu_bf(W, j), mu_bf(W, j)});
    for (size_t a = 0; a < sh.alt_j.size(); ++a) {
        const int p = sh.alt_power[a];
        BigFloat sc = sqrt(mu_bf(W, p / 2) * mu_bf(W, (p + 1) / 2));
        rows.push_back({true, p, BigFloat(0), sc});
    }
    const size_t R = rows.size();
    const size_t U = 2 * k;

    GaussRule seed = gauss_rule(W, k);
    BigFloat lam_floor = mu_bf(W, 0) / (4 * k);
    std::mt19937_64 rng(0x9d2c5680u);
    std::normal_distribution<double> gauss01(0.0, 1.0);

    auto evaluate = [&](const std::vector<BigFloat>& lam,
                        const std::vector<BigFloat>& s,
                        std::vector<BigFloat>& res,
                        std::vector<std::vector<BigFloat>>* Jac) {
        res.assign(R, BigFloat(0));
        if (Jac) Jac->assign(R, std::vector<BigFloat>(U, BigFloat(0)));
        for (size_t ri = 0; ri < R; ++ri) {
            const NlRow& row = rows[ri];
            BigFloat acc(0);
            for (int i = 0; i < k; ++i) {
                BigFloat term = lam[i] * pow_half(s[i], row.power);
                BigFloat signedterm = row.alt && i % 2 == 0 ? -term : term;
                acc += signedterm;
                if (Jac) {
                    (*Jac)[ri][i] = signedterm / row.scale;
                    (*Jac)[ri][k + i] =
                        signedterm * row.power / (2 * row.scale);
                }
            }
            res[ri] = (acc - row.target) / row.scale;
        }
    };

    std::string last_reason = "did not converge";
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<BigFloat> lam(k), s(k);
        for (int i = 0; i < k; ++i) {
            lam[i] = seed.w[i] > 0 ? seed.w[i] : lam_floor;
            s[i] = seed.s[i];
            if (attempt > 0) {
                lam[i] *= exp(BigFloat(0.35 * gauss01(rng)));
                s[i] *= exp(BigFloat(0.35 * gauss01(rng)));
            }
        }

        std::vector<BigFloat> res;
        std::vector<std::vector<BigFloat>> J;
        evaluate(lam, s, res, &J);
        double best = rel_inf_norm(res);
        BigFloat damp("1e-3");
        bool stalled = false;
        for (int iter = 0; iter < 400 && best > 1e-35 && !stalled; ++iter) {
            std::vector<std::vector<BigFloat>> A(U, std::vector<BigFloat>(U, BigFloat(0)));
            std::vector<BigFloat> g(U, BigFloat(0));
            for (size_t ri = 0; ri < R; ++ri)
                for (size_t a = 0; a < U; ++a) {
                    g[a] -= J[ri][a] * res[ri];
                    for (size_t b = 0; b <= a; ++b) A[a][b] += J[ri][a] * J[ri][b];
                }
            for (size_t a = 0; a < U; ++a)
                for (size_t b = a + 1; b < U; ++b) A[a][b] = A[b][a];

            int fails = 0;
            for (; fails < 30; ++fails) {
                auto Ad = A;
                for (size_t a = 0; a < U; ++a)
                    Ad[a][a] += damp * (A[a][a] + BigFloat("1e-40"));
                std::vector<BigFloat> step;
                try {
                    step = solve_dense_bf(Ad, g);
                } catch (const xu_solve_error&) {
                    damp *= 10;
                    continue;
                }
                BigFloat mx(0);
                for (const auto& d : step) mx = std::max(mx, BigFloat(abs(d)));
                if (mx > 2)
                    for (auto& d : step) d *= 2 / mx;
                std::vector<BigFloat> lam2(k), s2(k);
                for (int i = 0; i < k; ++i) {
                    lam2[i] = lam[i] * exp(step[i]);
                    s2[i] = s[i] * exp(step[k + i]);
                }
                std::vector<BigFloat> res2;
                evaluate(lam2, s2, res2, nullptr);
                double norm2 = rel_inf_norm(res2);
                if (norm2 < best) {
                    lam = std::move(lam2);
                    s = std::move(s2);
                    best = norm2;
                    damp = std::max(BigFloat(damp / 6), BigFloat("1e-16"));
                    evaluate(lam, s, res, &J);
                    break;
                }
                damp *= 10;
            }
            if (fails == 30) stalled = true;
        }

        if (best > 1e-13) {
            last_reason = "least-squares residual stalled at " + std::to_string(best);
            continue;
        }
        bool distinct = true;
        for (int i = 0; i < k; ++i)
            for (int j2 = i + 1; j2 < k; ++j2)
                if (abs(s[i] - s[j2]) <= (s[i] + s[j2]) * BigFloat("1e-10"))
                    distinct = false;
        if (!distinct) {
            last_reason = "radii collided";
            continue;
        }
        std::optional<Scalar> lambda0;
        if (sh.center) {
            BigFloat l0 = mu_bf(W, 0);
            for (int i = 0; i < k; ++i) l0 -= lam[i];
            if (!(l0 > 0)) {
                last_reason = "center weight came out nonpositive";
                continue;
            }
            lambda0 = Scalar(BigFloat(2 * big_pi() * l0));
        }
        std::vector<Scalar> lam_s, r_s;
        for (int i = 0; i < k; ++i) {
            lam_s.push_back(Scalar(lam[i]));
            r_s.push_back(Scalar(BigFloat(sqrt(s[i]))));
        }
        XuFormula F = make_xu_formula(family, n, std::move(lam_s), std::move(r_s),
                                      std::move(lambda0));
        if (!verify_conditions(F, W).pass) {
            last_reason = "solution failed re-verification";
            continue;
        }
        return F;
    }
    throw xu_solve_error("no positive solution with distinct radii found for family '" +
                         xu_family_name(family) + "', n=" + std::to_string(n) +
                         " (target " + kSolveTol + " relative): " + last_reason);
}

// ---------------------------------------------------------------------------
// Degree verification
// ---------------------------------------------------------------------------

XuDegreeReport verify_degree(const XuFormula& F, const RadialWeight& W, int t) {
    if (t < 0) throw scalar_error("verify_degree: negative degree");
    Config::ensure();
    const BigFloat two_pi = 2 * big_pi();
    const int N = F.angle_count();
    const std::vector<XuPoint> pts = build_points(F);

    // Per-point power tables for the monomial sweep.
    std::vector<std::vector<BigFloat>> xp(pts.size()), yp(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        xp[i].assign(t + 1, BigFloat(1));
        yp[i].assign(t + 1, BigFloat(1));
        for (int e = 1; e <= t; ++e) {
            xp[i][e] = xp[i][e - 1] * pts[i].x;
            yp[i][e] = yp[i][e - 1] * pts[i].y;
        }
    }
    auto scale_for = [&](int deg) {
        BigFloat sc = two_pi * mu_bf(W, (deg + 1) / 2);
        return sc > 0 ? sc : BigFloat(1);
    };

    XuDegreeReport rep;
    bool pass_a = true, pass_b = true;

    for (int a = 0; a <= t; ++a)
        for (int b = 0; a + b <= t; ++b) {
            BigFloat sum(0);
            for (size_t i = 0; i < pts.size(); ++i) sum += pts[i].w * xp[i][a] * yp[i][b];
            BigFloat exact(0);
            if (a % 2 == 0 && b % 2 == 0) {
                Rational ang(double_factorial(a - 1) * double_factorial(b - 1));
                ang /= Rational(double_factorial(a + b));
                exact = two_pi * mu_bf(W, (a + b) / 2) * Scalar(ang).to_bigfloat();
            }
            double res = BigFloat(abs(sum - exact) / scale_for(a + b)).convert_to<double>();
            rep.max_residual_monomial = std::max(rep.max_residual_monomial, res);
            ++rep.monomial_count;
            if (res > kTol) {
                pass_a = false;
                rep.failures.push_back({false, a, b, res, false});
            }
        }

    // Dihedral invariants u^p v^q with u = r^2, v = Re((x+iy)^N).
    for (int q = 0; N * q <= t; ++q)
        for (int p = 0; 2 * p + N * q <= t; ++p) {
            BigFloat sum(0);
            for (const XuPoint& pt : pts) {
                BigFloat u = pt.x * pt.x + pt.y * pt.y;
                BigFloat re(1), im(0);
                for (int e = 0; e < N * (q > 0 ? 1 : 0); ++e) {
                    BigFloat re2 = re * pt.x - im * pt.y;
                    im = re * pt.y + im * pt.x;
                    re = re2;
                }
                BigFloat v = re;      // Re((x+iy)^N) after N multiplies
                BigFloat val = pow(u, p);
                for (int e = 0; e < q; ++e) val *= v;
                sum += pt.w * val;
            }
            BigFloat exact(0);
            if (q % 2 == 0) {
                Rational ang(double_factorial(q - 1));
                ang /= Rational(double_factorial(q));
                exact = two_pi * mu_bf(W, p + N * q / 2) * Scalar(ang).to_bigfloat();
            }
            double res =
                BigFloat(abs(sum - exact) / scale_for(2 * p + N * q)).convert_to<double>();
            rep.max_residual_invariant = std::max(rep.max_residual_invariant, res);
            ++rep.invariant_count;
            if (res > kTol) {
                pass_b = false;
                rep.failures.push_back({true, p, q, res, false});
            }
        }

    if (pass_a != pass_b)
        throw std::runtime_error(
            "degree checks disagree: monomial sweep says " +
            std::string(pass_a ? "pass" : "fail") + " but the invariant sweep says " +
            std::string(pass_b ? "pass" : "fail"));
    rep.pass = pass_a;
    return rep;
}

// ---------------------------------------------------------------------------
// Dihedral reduction
// ---------------------------------------------------------------------------

namespace {

struct CRat {
    Rational re, im;
    bool zero() const { return re == 0 && im == 0; }
};

}  // namespace

DihedralExpansion dihedral_reduce(const MultiPoly& f, int ell) {
    if (ell < 1) throw scalar_error("dihedral_reduce: ell must be positive");
    if (f.nvars() != 2) throw scalar_error("dihedral_reduce: polynomial must be bivariate");

    // Complexify: x^a y^b -> sum over z^j zbar^k with Gaussian-rational
    // coefficients, using x = (z+zbar)/2, y = -i (z-zbar)/2.
    std::map<std::pair<int, int>, CRat> cz;
    for (const auto& [e, c] : f.terms()) {
        if (c.kind() != Scalar::Kind::rational)
            throw scalar_error("dihedral_reduce: coefficients must be rational");
        const int a = e[0], b = e[1];
        Rational base = c.rational();
        base /= Rational(Integer(1) << (a + b));
        // (-i)^b
        int unit = ((b % 4) + 4) % 4;   // 0:1  1:-i  2:-1  3:i
        for (int p = 0; p <= a; ++p)
            for (int q = 0; q <= b; ++q) {
                Rational coef = base * binomial(a, p) * binomial(b, q);
                if ((b - q) % 2) coef = -coef;
                CRat add{};
                switch (unit) {
                    case 0: add.re = coef; break;
                    case 1: add.im = -coef; break;
                    case 2: add.re = -coef; break;
                    default: add.im = coef; break;
                }
                CRat& slot = cz[{p + q, a + b - p - q}];
                slot.re += add.re;
                slot.im += add.im;
            }
    }
    for (auto it = cz.begin(); it != cz.end();)
        it = it->second.zero() ? cz.erase(it) : std::next(it);

    for (const auto& [jk, c] : cz) {
        if ((jk.first - jk.second) % ell != 0)
            throw scalar_error("polynomial is not invariant under rotation by 2*pi/" +
                               std::to_string(ell));
        if (c.im != 0)
            throw scalar_error("polynomial is not invariant under the reflection");
        auto mirror = cz.find({jk.second, jk.first});
        if (mirror == cz.end() || mirror->second.re != c.re)
            throw scalar_error("polynomial is not invariant under the reflection");
    }

    // r^(ell q) cos(ell q theta) as a polynomial C_q(u, v):
    // C_0 = 1, C_1 = v, C_{q+1} = 2 v C_q - u^ell C_{q-1}.
    using UV = std::map<std::pair<int, int>, Rational>;
    std::vector<UV> cheb{{{{0, 0}, Rational(1)}}, {{{0, 1}, Rational(1)}}};
    auto cheb_up_to = [&](int q) {
        while (static_cast<int>(cheb.size()) <= q) {
            const UV& c1 = cheb[cheb.size() - 1];
            const UV& c0 = cheb[cheb.size() - 2];
            UV next;
            for (const auto& [pq, c] : c1) next[{pq.first, pq.second + 1}] += 2 * c;
            for (const auto& [pq, c] : c0) next[{pq.first + ell, pq.second}] -= c;
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            cheb.push_back(std::move(next));
        }
    };

    DihedralExpansion out;
    out.ell = ell;
    for (const auto& [jk, c] : cz) {
        const int j = jk.first, k2 = jk.second;
        if (j < k2) continue;
        const int q = (j - k2) / ell;
        Rational factor = (j == k2) ? c.re : 2 * c.re;
        cheb_up_to(q);
        for (const auto& [pq, cc] : cheb[q]) {
            Rational& slot = out.coeff[{k2 + pq.first, pq.second}];
            slot += factor * cc;
        }
    }
    for (auto it = out.coeff.begin(); it != out.coeff.end();)
        it = it->second == 0 ? out.coeff.erase(it) : std::next(it);
    return out;
}

MultiPoly dihedral_reconstruct(const DihedralExpansion& e) {
    const int ell = e.ell;
    MultiPoly u = MultiPoly::radius2(2);
    MultiPoly v = MultiPoly::constant(2, Scalar(0));
    for (int j = 0; j <= ell; j += 2) {
        Rational c(binomial(ell, j));
        if (j % 4 == 2) c = -c;
        Expo ex{ell - j, j};
        v += MultiPoly::monomial(ex, Scalar(c));
    }
    MultiPoly out = MultiPoly::constant(2, Scalar(0));
    for (const auto& [pq, c] : e.coeff)
        out += (u.pow(pq.first) * v.pow(pq.second)).scaled(Scalar(c));
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string xu_formula_to_json_text(const XuFormula& F) {
    nlohmann::json j;
    j["family"] = xu_family_name(F.family);
    j["n"] = F.n;
    j["m"] = F.m;
    j["lambda"] = nlohmann::json::array();
    for (const Scalar& v : F.lambda) j["lambda"].push_back(scalar_to_json(v));
    j["r"] = nlohmann::json::array();
    for (const Scalar& v : F.r) j["r"].push_back(scalar_to_json(v));
    if (F.lambda0) j["lambda0"] = scalar_to_json(*F.lambda0);
    return canonical_dump(j);
}

XuFormula xu_formula_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw scalar_error(std::string("bad formula JSON: ") + e.what());
    }
    for (const char* key : {"family", "n", "m", "lambda", "r"})
        if (!j.contains(key))
            throw scalar_error(std::string("formula JSON missing '") + key + "'");
    XuFamily family = parse_xu_family(j.at("family").get<std::string>());
    int n = j.at("n").get<int>();
    std::vector<Scalar> lambda, r;
    for (const auto& v : j.at("lambda")) lambda.push_back(scalar_from_json(v));
    for (const auto& v : j.at("r")) r.push_back(scalar_from_json(v));
    std::optional<Scalar> lambda0;
    if (j.contains("lambda0")) lambda0 = scalar_from_json(j.at("lambda0"));
    XuFormula F = make_xu_formula(family, n, std::move(lambda), std::move(r),
                                  std::move(lambda0));
    if (j.at("m").get<int>() != F.m)
        throw scalar_error("formula JSON: m=" + j.at("m").dump() +
                           " inconsistent with n=" + std::to_string(n));
    return F;
}

}  // namespace orbitdesigns
