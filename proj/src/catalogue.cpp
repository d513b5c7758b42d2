#include "orbitdesigns/catalogue.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbitdesigns {

namespace {

using SMap = std::map<int, Scalar>;

std::function<std::vector<int>(int)> j_const(std::vector<int> J) {
    return [J](int) { return J; };
}

// Maps with every listed orbit at radius 1, weight 1.
std::function<SMap(int, const Rational&)> unit_map(std::vector<int> J) {
    return [J](int, const Rational&) {
        SMap m;
        for (int k : J) m[k] = Scalar(1);
        return m;
    };
}

std::function<bool(const Rational&)> always_valid() {
    return [](const Rational&) { return true; };
}

// s > 0 and s != 1 (the free orbit must not collide with the unit sphere).
std::function<bool(const Rational&)> positive_distinct() {
    return [](const Rational& s) { return s > 0 && s != 1; };
}

Scalar rat_pow(const Rational& s, int e) { return Scalar(s).pow(e); }

CatalogueRow make_row(GroupType type, int n, int t, std::vector<int> J,
                      DualKind dual, std::string radii_text,
                      std::string weight_text, std::string note) {
    CatalogueRow r;
    r.type = type;
    r.n = n;
    r.t = t;
    r.J = J;
    r.dual = dual;
    r.j_at = j_const(J);
    r.radius2_at = unit_map(J);
    r.weight_at = unit_map(J);
    r.valid = always_valid();
    r.radii_text = std::move(radii_text);
    r.weight_text = std::move(weight_text);
    r.note = std::move(note);
    return r;
}

std::vector<CatalogueRow> build_A() {
    std::vector<CatalogueRow> rows;

    {   // t=2: the rescaled simplex orbit, at every rank.
        CatalogueRow r = make_row(GroupType::A, 2, 2, {1}, DualKind::diagram,
                                  "r_1 = 1", "w_1 = 1",
                                  "regular simplex; mirror row uses the opposite end node");
        r.any_n = true;
        rows.push_back(r);
    }

    rows.push_back(make_row(GroupType::A, 3, 3, {2}, DualKind::none,
                            "r_2 = 1", "w_2 = 1", "octahedron from the middle node"));

    {   // t=4, n=2: two triangles at a free radius ratio.
        CatalogueRow r = make_row(GroupType::A, 2, 4, {1, 2}, DualKind::none,
                                  "r_1 = 1, r_2 free",
                                  "w_1 = 1, w_2 = r_2^{-3}", "");
        r.family = true;
        r.free_k = 2;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, Scalar(s)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, Scalar(s).sqrt().pow(-3)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    {   // t=4, n=4
        CatalogueRow r = make_row(GroupType::A, 4, 4, {1, 3}, DualKind::diagram,
                                  "r_1 = 1, r_3^2 = 1/6",
                                  "w_1 = 1, w_3 = 27", "");
        r.radius2_at = [](int, const Rational&) {
            return SMap{{1, Scalar(1)}, {3, Scalar(ratio(1, 6))}};
        };
        r.weight_at = [](int, const Rational&) {
            return SMap{{1, Scalar(1)}, {3, Scalar(27)}};
        };
        rows.push_back(r);
    }

    {   // t=4, n=5
        CatalogueRow r = make_row(GroupType::A, 5, 4, {1, 4}, DualKind::diagram,
                                  "r_1 = 1, r_4^2 = 8/5",
                                  "w_1 = 1, w_4 = 1/2", "");
        r.radius2_at = [](int, const Rational&) {
            return SMap{{1, Scalar(1)}, {4, Scalar(ratio(8, 5))}};
        };
        r.weight_at = [](int, const Rational&) {
            return SMap{{1, Scalar(1)}, {4, Scalar(ratio(1, 2))}};
        };
        rows.push_back(r);
    }

    {   // t=4, n=6
        CatalogueRow r = make_row(GroupType::A, 6, 4, {1, 5}, DualKind::diagram,
                                  "r_1 = 1, r_5^2 = 15",
                                  "w_1 = 1, w_5 = 1/81", "");
        r.radius2_at = [](int, const Rational&) {
            return SMap{{1, Scalar(1)}, {5, Scalar(15)}};
        };
        r.weight_at = [](int, const Rational&) {
            return SMap{{1, Scalar(1)}, {5, Scalar(ratio(1, 81))}};
        };
        rows.push_back(r);
    }

    rows.push_back(make_row(GroupType::A, 2, 5, {1, 2}, DualKind::none,
                            "r_1 = r_2 = 1", "w_1 = w_2 = 1",
                            "regular hexagon"));

    {   // t=5, n=3: cube plus a free octahedron.
        CatalogueRow r = make_row(GroupType::A, 3, 5, {1, 2, 3}, DualKind::none,
                                  "r_1 = r_3 = 1, r_2 free",
                                  "w_1 = w_3 = 1, w_2 = 8 / (9 r_2^4)", "");
        r.family = true;
        r.free_k = 2;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, Scalar(s)}, {3, Scalar(1)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)},
                        {2, Scalar(ratio(8, 9)) * rat_pow(s, -2)},
                        {3, Scalar(1)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    {   // t=5, n=5
        CatalogueRow r = make_row(GroupType::A, 5, 5, {1, 3, 5}, DualKind::none,
                                  "r_1 = r_5 = 1, r_3 free",
                                  "w_1 = w_5 = 1, w_3 = 27 / (25 r_3^4)", "");
        r.family = true;
        r.free_k = 3;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {3, Scalar(s)}, {5, Scalar(1)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)},
                        {3, Scalar(ratio(27, 25)) * rat_pow(s, -2)},
                        {5, Scalar(1)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    rows.push_back(make_row(GroupType::A, 7, 5, {2, 6}, DualKind::none,
                            "r_2 = r_6 = 1", "w_2 = w_6 = 1",
                            "two 28-point orbits on one sphere"));

    return rows;
}

std::vector<CatalogueRow> build_B() {
    std::vector<CatalogueRow> rows;

    {   // t=3: cross polytope, at every rank.
        CatalogueRow r = make_row(GroupType::B, 2, 3, {1}, DualKind::none,
                                  "r_1 = 1", "w_1 = 1", "cross polytope");
        r.any_n = true;
        rows.push_back(r);
    }

    rows.push_back(make_row(GroupType::B, 2, 3, {2}, DualKind::none,
                            "r_2 = 1", "w_2 = 1", "square from the diagonal node"));

    {   // t=5, n=2: square plus a free diagonal square.
        CatalogueRow r = make_row(GroupType::B, 2, 5, {1, 2}, DualKind::none,
                                  "r_1 = 1, r_2 free",
                                  "w_1 = 1, w_2 = 1 / r_2^4", "");
        r.family = true;
        r.free_k = 2;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, Scalar(s)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, rat_pow(s, -2)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    {   // t=5, n=3: octahedron plus a free cube.
        CatalogueRow r = make_row(GroupType::B, 3, 5, {1, 3}, DualKind::none,
                                  "r_1 = 1, r_3 free",
                                  "w_1 = 1, w_3 = 9 / (8 r_3^4)", "");
        r.family = true;
        r.free_k = 3;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {3, Scalar(s)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)},
                        {3, Scalar(ratio(9, 8)) * rat_pow(s, -2)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    rows.push_back(make_row(GroupType::B, 2, 7, {1, 2}, DualKind::none,
                            "r_1 = r_2 = 1", "w_1 = w_2 = 1",
                            "regular octagon"));

    {   // t=7, n=3: three spheres, one free radius.
        CatalogueRow r = make_row(
            GroupType::B, 3, 7, {1, 2, 3}, DualKind::none,
            "r_1 = 1, r_2 free, r_3^2 = 3 r_2^2 / (5 r_2^2 - 2)",
            "w_1 = 1, w_2 = 4 / (5 r_2^6), w_3 = (5 r_2^2 - 2)^3 / (40 r_2^6)",
            "requires r_2^2 > 2/5");
        r.family = true;
        r.free_k = 2;
        r.radius2_at = [](int, const Rational& s) {
            Rational s3 = Rational(3 * s) / Rational(5 * s - 2);
            return SMap{{1, Scalar(1)}, {2, Scalar(s)}, {3, Scalar(s3)}};
        };
        r.weight_at = [](int, const Rational& s) {
            Rational c = Rational(5 * s - 2);
            return SMap{{1, Scalar(1)},
                        {2, Scalar(ratio(4, 5)) * rat_pow(s, -3)},
                        {3, Scalar(Rational(c * c * c) / Rational(40 * s * s * s))}};
        };
        r.valid = [](const Rational& s) {
            return s > ratio(2, 5) && s != 1;
        };
        rows.push_back(r);
    }

    {   // t=7, n=4: 24-point unit orbits plus a free middle orbit.
        CatalogueRow r = make_row(GroupType::B, 4, 7, {1, 2, 4}, DualKind::none,
                                  "r_1 = r_4 = 1, r_2 free",
                                  "w_1 = w_4 = 1, w_2 = 1 / r_2^6", "");
        r.family = true;
        r.free_k = 2;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, Scalar(s)}, {4, Scalar(1)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, rat_pow(s, -3)}, {4, Scalar(1)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    return rows;
}

std::vector<CatalogueRow> build_D() {
    std::vector<CatalogueRow> rows;

    rows.push_back(make_row(GroupType::D, 4, 3, {3}, DualKind::spinor,
                            "r_3 = 1", "w_3 = 1",
                            "half-spinor cross polytope; mirror row uses the other end node"));

    {   // t=5, n=6: unit cross plus a free half-spinor orbit.
        CatalogueRow r = make_row(GroupType::D, 6, 5, {1, 5}, DualKind::spinor,
                                  "r_1 = 1, r_5 free",
                                  "w_1 = 1, w_5 = 9 / (8 r_5^4)", "");
        r.family = true;
        r.free_k = 5;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {5, Scalar(s)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)},
                        {5, Scalar(ratio(9, 8)) * rat_pow(s, -2)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    {   // t=7, n=4: all four nodes, one free radius.
        CatalogueRow r = make_row(GroupType::D, 4, 7, {1, 2, 3, 4}, DualKind::none,
                                  "r_1 = r_3 = r_4 = 1, r_2 free",
                                  "w_1 = w_3 = w_4 = 1, w_2 = 1 / r_2^6", "");
        r.family = true;
        r.free_k = 2;
        r.radius2_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, Scalar(s)}, {3, Scalar(1)}, {4, Scalar(1)}};
        };
        r.weight_at = [](int, const Rational& s) {
            return SMap{{1, Scalar(1)}, {2, rat_pow(s, -3)},
                        {3, Scalar(1)}, {4, Scalar(1)}};
        };
        r.valid = positive_distinct();
        rows.push_back(r);
    }

    rows.push_back(make_row(GroupType::D, 8, 7, {2, 7}, DualKind::spinor,
                            "r_2 = r_7 = 1", "w_2 = w_7 = 1",
                            "112 + 128 points on one sphere"));

    return rows;
}

int dual_index(DualKind dual, int n, int k) {
    switch (dual) {
        case DualKind::diagram: return n + 1 - k;
        case DualKind::spinor:
            if (k == n - 1) return n;
            if (k == n) return n - 1;
            return k;
        case DualKind::none: break;
    }
    return k;
}

struct RowMaps {
    std::vector<int> J;
    SMap radius2, weight;
    int free_k = 0;
};

// Concrete data for a row (or its mirror) at rank n and parameter s.  Mirror
// rows are renormalized so the smallest listed orbit sits at radius 1 with
// weight 1, matching the convention of the exhaustive search.
RowMaps instantiate(const CatalogueRow& row, int n, const Rational& s, bool dual) {
    RowMaps m;
    m.J = row.j_at(n);
    m.radius2 = row.radius2_at(n, s);
    m.weight = row.weight_at(n, s);
    m.free_k = row.free_k;
    if (!dual) return m;
    if (row.dual == DualKind::none)
        throw std::logic_error("catalogue row has no mirror");

    RowMaps d;
    for (int k : m.J) d.J.push_back(dual_index(row.dual, n, k));
    std::sort(d.J.begin(), d.J.end());
    for (const auto& [k, v] : m.radius2) d.radius2[dual_index(row.dual, n, k)] = v;
    for (const auto& [k, v] : m.weight) d.weight[dual_index(row.dual, n, k)] = v;
    d.free_k = row.family ? dual_index(row.dual, n, row.free_k) : 0;

    int kmin = d.J.front();
    Scalar r0 = d.radius2.at(kmin);
    Scalar w0 = d.weight.at(kmin);
    if (row.family && (r0 != Scalar(1) || w0 != Scalar(1)))
        throw std::logic_error("mirror of a family row would rescale its parameter");
    for (auto& [k, v] : d.radius2) v = v / r0;
    for (auto& [k, v] : d.weight) v = v / w0;
    return d;
}

std::string join_J(const std::vector<int>& J) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < J.size(); ++i) os << (i ? "," : "") << J[i];
    os << "}";
    return os.str();
}

std::string rat_str(const Rational& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

std::string scalar_brief(const Scalar& v) { return v.str(); }

bool scalar_eq_exact(const Scalar& x, const Scalar& y) {
    return RadicalSum(x) == RadicalSum(y);
}

}  // namespace

const std::vector<CatalogueRow>& catalogue(GroupType type) {
    static const std::vector<CatalogueRow> a = build_A();
    static const std::vector<CatalogueRow> b = build_B();
    static const std::vector<CatalogueRow> d = build_D();
    switch (type) {
        case GroupType::A: return a;
        case GroupType::B: return b;
        case GroupType::D: return d;
    }
    throw std::invalid_argument("unknown group type");
}

WeightedDesign CatalogueInstance::design() const {
    std::map<int, Scalar> radii;
    for (const auto& [k, r2] : radius2) radii[k] = r2.sqrt();
    return make_orbit_design(type, n, J, radii, weight);
}

std::vector<Rational> default_family_samples() {
    return {Rational(4), ratio(1, 4), ratio(25, 4), Rational(9)};
}

std::vector<CatalogueInstance> catalogue_instances(
    GroupType type, int n_lo, int n_hi,
    const std::vector<Rational>& family_samples) {
    std::vector<CatalogueInstance> out;
    n_lo = std::max(n_lo, min_rank(type));

    auto emit = [&](const CatalogueRow& row, int n, const Rational& s, bool dual) {
        RowMaps m = instantiate(row, n, s, dual);
        CatalogueInstance inst;
        inst.type = type;
        inst.n = n;
        inst.t = row.t;
        inst.J = m.J;
        inst.family = row.family;
        inst.is_dual = dual;
        inst.s = s;
        inst.radius2 = m.radius2;
        inst.weight = m.weight;
        std::ostringstream os;
        os << group_type_name(type) << n << " t=" << row.t << " J=" << join_J(m.J);
        if (row.family) os << " at r_" << m.free_k << "^2 = " << rat_str(s);
        if (dual) os << " (mirror)";
        inst.label = os.str();
        out.push_back(std::move(inst));
    };

    for (const CatalogueRow& row : catalogue(type)) {
        std::vector<int> ranks;
        if (row.any_n) {
            for (int n = std::max(row.n, n_lo); n <= n_hi; ++n) ranks.push_back(n);
        } else if (row.n >= n_lo && row.n <= n_hi) {
            ranks.push_back(row.n);
        }
        for (int n : ranks) {
            std::vector<Rational> svals{Rational(0)};
            if (row.family) {
                svals.clear();
                for (const Rational& s : family_samples) {
                    if (row.valid(s)) svals.push_back(s);
                    if (svals.size() == 3) break;
                }
            }
            for (const Rational& s : svals) {
                emit(row, n, s, false);
                if (row.dual != DualKind::none) emit(row, n, s, true);
            }
        }
    }
    return out;
}

CatalogueCheck check_against_catalogue(GroupType type,
                                       const std::vector<ClassifiedDesign>& found,
                                       int n_max) {
    CatalogueCheck chk;
    auto complain = [&](const std::string& msg) {
        chk.ok = false;
        chk.problems.push_back(msg);
    };

    struct Expected {
        const CatalogueRow* row;
        bool dual;
        bool used = false;
    };
    std::map<std::tuple<int, int, std::vector<int>>, Expected> expected;
    for (const CatalogueRow& row : catalogue(type)) {
        int lo = row.any_n ? std::max(row.n, min_rank(type)) : row.n;
        int hi = row.any_n ? n_max : row.n;
        for (int n = lo; n <= hi && n <= n_max; ++n) {
            expected[{n, row.t, instantiate(row, n, Rational(4), false).J}] =
                Expected{&row, false};
            if (row.dual != DualKind::none)
                expected[{n, row.t, instantiate(row, n, Rational(4), true).J}] =
                    Expected{&row, true};
        }
    }

    for (const ClassifiedDesign& f : found) {
        if (type == GroupType::D) {
            // Sets inside {1..n-2} carry the full hyperoctahedral symmetry and
            // belong to the type-B table.
            bool touches_fork = false;
            for (int k : f.J) touches_fork |= (k == f.n - 1 || k == f.n);
            if (!touches_fork) continue;
        }
        std::string tag = group_type_name(type) + std::to_string(f.n) + " t=" +
                          std::to_string(f.t) + " J=" + join_J(f.J);
        auto it = expected.find({f.n, f.t, f.J});
        if (it == expected.end()) {
            complain("unexpected row " + tag);
            continue;
        }
        Expected& exp = it->second;
        if (exp.used) {
            complain("duplicate row " + tag);
            continue;
        }
        exp.used = true;
        const CatalogueRow& row = *exp.row;

        if (f.family != row.family) {
            complain(tag + ": family flag is " + (f.family ? "set" : "clear") +
                     " but the catalogue says otherwise");
            continue;
        }
        if (!f.resolved) {
            complain(tag + ": search left this row numerically unresolved");
            continue;
        }
        if (f.cardinality != f.bound)
            complain(tag + ": size " + std::to_string(f.cardinality) +
                     " does not meet bound " + std::to_string(f.bound));

        int free_k = row.family ? instantiate(row, f.n, Rational(4), exp.dual).free_k : 0;
        size_t si = 0;
        for (const ClassifiedDesign::Assignment& sample : f.samples) {
            ++si;
            std::string stag = tag + " sample " + std::to_string(si);
            Rational s(0);
            if (row.family) {
                auto rit = sample.radius2.find(free_k);
                if (rit == sample.radius2.end() ||
                    rit->second.kind() != Scalar::Kind::rational) {
                    complain(stag + ": free radius is missing or irrational");
                    continue;
                }
                s = rit->second.rational();
                if (!row.valid(s)) {
                    complain(stag + ": parameter " + rat_str(s) +
                             " is outside the validity range");
                    continue;
                }
            }
            RowMaps m = instantiate(row, f.n, s, exp.dual);
            auto check_map = [&](const char* what, const SMap& got, const SMap& want) {
                if (got.size() != want.size()) {
                    complain(stag + ": " + what + " map has wrong support");
                    return;
                }
                for (const auto& [k, v] : want) {
                    auto git = got.find(k);
                    if (git == got.end()) {
                        complain(stag + ": missing " + what + " for orbit " +
                                 std::to_string(k));
                    } else if (!scalar_eq_exact(git->second, v)) {
                        complain(stag + ": " + what + " of orbit " + std::to_string(k) +
                                 " is " + scalar_brief(git->second) + ", expected " +
                                 scalar_brief(v));
                    }
                }
            };
            check_map("radius^2", sample.radius2, m.radius2);
            check_map("weight", sample.weight, m.weight);
        }
        ++chk.matched;
    }

    for (const auto& [key, exp] : expected) {
        if (!exp.used)
            complain("missing row " + group_type_name(type) +
                     std::to_string(std::get<0>(key)) + " t=" +
                     std::to_string(std::get<1>(key)) + " J=" +
                     join_J(std::get<2>(key)));
    }
    return chk;
}

}  // namespace orbitdesigns
