#include "orbitdesigns/cli.hpp"

#include "orbitdesigns/catalogue.hpp"
#include "orbitdesigns/designs.hpp"
#include "orbitdesigns/jsonio.hpp"
#include "orbitdesigns/xu.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace orbitdesigns {
namespace {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw scalar_error("unknown output format '" + s + "' (expected json, csv, or text)");
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

std::string vec_text(const Vec& x) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i].str();
    os << ')';
    return os.str();
}

std::string map_text(const std::map<int, Scalar>& m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, v] : m) {
        os << (first ? "" : ", ") << k << ": " << v.str();
        first = false;
    }
    os << '}';
    return os.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

// ---------------------------------------------------------------------------
// design files

WeightedDesign load_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw scalar_error("cannot open design file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw scalar_error("design file '" + path + "' is not valid JSON: " + e.what());
    }
    return design_from_json(j);
}

// ---------------------------------------------------------------------------
// shared option state

struct Options {
    OutputFormat format = OutputFormat::text;
    bool format_given = false;

    std::string type_s = "A";
    int rank = 0;
    int corner = 0;
    bool as_json = false;

    int degree = 0;
    bool closed_form = false;

    std::string file;
    int tmax = 8;
    std::optional<int> expect;

    int n = 0, t = 0, spheres = 1;
    bool origin = false;

    int nmax = 0;
    int classify_tmax = 7;

    int table = 0;
    std::vector<std::string> params;

    std::string weight_s = "gaussian";
    std::string family_s;
    std::string out_file;
    int verify_t = 0;
};

RadialWeight parse_weight(const std::string& s) {
    if (s == "gaussian") return RadialWeight::gaussian();
    if (s == "unit_disk" || s == "unit-disk") return RadialWeight::unit_disk();
    throw scalar_error("unknown weight '" + s + "' (expected gaussian or unit_disk)");
}

// ---------------------------------------------------------------------------
// subcommand bodies

int cmd_orbit(const Options& opt, std::ostream& out) {
    GroupType type = parse_group_type(opt.type_s);
    ReflectionGroup G = build_group(type, opt.rank);
    Orbit o = corner_orbit(G, opt.corner);
    OutputFormat fmt = opt.as_json ? OutputFormat::json : opt.format;
    if (fmt == OutputFormat::json) {
        nlohmann::json j;
        j["type"] = group_type_name(type);
        j["rank"] = opt.rank;
        j["corner"] = opt.corner;
        j["size"] = o.size();
        j["norm2"] = scalar_to_json(o.norm2);
        nlohmann::json pts = nlohmann::json::array();
        for (const Vec& x : o.points) {
            nlohmann::json row = nlohmann::json::array();
            for (const Scalar& c : x) row.push_back(scalar_to_json(c));
            pts.push_back(std::move(row));
        }
        j["points"] = std::move(pts);
        out << canonical_dump(j);
    } else if (fmt == OutputFormat::csv) {
        out << "type,rank,corner,size,norm2\n"
            << group_type_name(type) << ',' << opt.rank << ',' << opt.corner << ','
            << o.size() << ',' << csv_quote(o.norm2.str()) << '\n';
        for (const Vec& x : o.points) {
            for (size_t i = 0; i < x.size(); ++i)
                out << (i ? "," : "") << csv_quote(x[i].str());
            out << '\n';
        }
    } else {
        out << "orbit of corner vector v_" << opt.corner << " under "
            << group_type_name(type) << "_" << opt.rank << '\n'
            << "size " << o.size() << ", squared norm " << o.norm2.str() << '\n';
        for (const Vec& x : o.points) out << "  " << vec_text(x) << '\n';
    }
    return 0;
}

int cmd_harm_basis(const Options& opt, std::ostream& out) {
    GroupType type = parse_group_type(opt.type_s);
    struct Entry {
        std::string label;
        std::string text;
    };
    std::vector<Entry> entries;
    if (opt.closed_form) {
        for (const std::string& label : closed_form_labels(type, opt.rank, opt.degree))
            entries.push_back({label, closed_form_invariant(type, opt.rank, label).str()});
    } else {
        ReflectionGroup G = build_group(type, opt.rank);
        const auto& basis = invariant_harm_basis(G, opt.degree);
        for (size_t i = 0; i < basis.size(); ++i)
            entries.push_back({"phi_" + std::to_string(i + 1), basis[i].str()});
    }
    if (opt.format == OutputFormat::json) {
        nlohmann::json j;
        j["type"] = group_type_name(type);
        j["rank"] = opt.rank;
        j["degree"] = opt.degree;
        j["closed_form"] = opt.closed_form;
        nlohmann::json list = nlohmann::json::array();
        for (const Entry& e : entries)
            list.push_back({{"label", e.label}, {"text", e.text}});
        j["polynomials"] = std::move(list);
        out << canonical_dump(j);
    } else if (opt.format == OutputFormat::csv) {
        out << "label,polynomial\n";
        for (const Entry& e : entries)
            out << csv_quote(e.label) << ',' << csv_quote(e.text) << '\n';
    } else {
        if (entries.empty())
            out << "(empty basis in degree " << opt.degree << ")\n";
        for (const Entry& e : entries) out << e.label << ": " << e.text << '\n';
    }
    return 0;
}

int cmd_check_design(const Options& opt, std::ostream& out) {
    WeightedDesign X = load_design_file(opt.file);
    StrengthReport full = strength_full(X, opt.tmax);
    StrengthReport direct = strength_direct(X, opt.tmax);
    std::optional<StrengthReport> inv;
    if (X.orbit_based) {
        ReflectionGroup G = build_group(X.type, X.rank);
        inv = strength_invariant(X, G, opt.tmax);
    }
    bool agree = full.t_certified == direct.t_certified &&
                 (!inv || inv->t_certified == full.t_certified);
    int t = full.t_certified;
    std::optional<TightnessReport> tight;
    if (agree && t >= 1) tight = is_tight(X, t);

    if (opt.format == OutputFormat::json) {
        nlohmann::json j;
        j["file"] = opt.file;
        j["n"] = X.n;
        j["size"] = X.size();
        j["shells"] = X.shells.size();
        j["contains_origin"] = X.contains_origin;
        j["orbit_based"] = X.orbit_based;
        j["t_max"] = opt.tmax;
        nlohmann::json methods;
        methods["full_harmonic"] = full.t_certified;
        methods["direct_integration"] = direct.t_certified;
        if (inv) methods["invariant"] = inv->t_certified;
        j["methods"] = std::move(methods);
        j["agree"] = agree;
        j["t_certified"] = t;
        if (tight) {
            j["bound"] = tight->bound;
            j["tight"] = tight->tight;
        }
        out << canonical_dump(j);
    } else if (opt.format == OutputFormat::csv) {
        out << "key,value\n";
        out << "n," << X.n << "\nsize," << X.size() << "\nt_max," << opt.tmax << '\n';
        out << "t_full," << full.t_certified << "\nt_direct," << direct.t_certified << '\n';
        if (inv) out << "t_invariant," << inv->t_certified << '\n';
        out << "agree," << (agree ? "true" : "false") << '\n';
        out << "t_certified," << t << '\n';
        if (tight)
            out << "bound," << tight->bound << "\ntight," << (tight->tight ? "true" : "false")
                << '\n';
    } else {
        out << "design: n=" << X.n << ", " << X.shells.size() << " shell(s), " << X.size()
            << " point(s)";
        if (X.orbit_based)
            out << " [" << group_type_name(X.type) << X.rank << ", J=" << join_ints(X.J) << "]";
        out << '\n';
        out << "strength (full_harmonic):      " << full.t_certified << '\n';
        out << "strength (direct_integration): " << direct.t_certified << '\n';
        if (inv) out << "strength (invariant):          " << inv->t_certified << '\n';
        out << "methods agree: " << (agree ? "yes" : "NO") << '\n';
        if (tight)
            out << "cardinality " << tight->size << " vs bound " << tight->bound
                << (tight->tight ? " (tight)" : "") << '\n';
    }
    if (!agree) return 1;
    if (opt.expect && *opt.expect != t) return 1;
    return 0;
}

int cmd_fisher(const Options& opt, std::ostream& out) {
    if (opt.n < 1 || opt.t < 1 || opt.spheres < 1)
        throw scalar_error("fisher: n, t and spheres must be positive");
    Parity parity = opt.t % 2 == 0 ? Parity::even : Parity::odd;
    int e = (opt.t + 1) / 2;
    long long bound = fisher_bound(opt.n, e, parity, opt.spheres, opt.origin, opt.origin);
    if (opt.format == OutputFormat::json) {
        nlohmann::json j;
        j["n"] = opt.n;
        j["t"] = opt.t;
        j["spheres"] = opt.spheres;
        j["origin"] = opt.origin;
        j["e"] = e;
        j["parity"] = parity == Parity::even ? "even" : "odd";
        j["bound"] = bound;
        out << canonical_dump(j);
    } else if (opt.format == OutputFormat::csv) {
        out << "n,t,spheres,origin,bound\n"
            << opt.n << ',' << opt.t << ',' << opt.spheres << ','
            << (opt.origin ? "true" : "false") << ',' << bound << '\n';
    } else {
        out << "Fisher-type bound for a Euclidean " << opt.t << "-design in R^" << opt.n
            << " on " << opt.spheres << " sphere(s)"
            << (opt.origin ? " plus the origin" : "") << ": " << bound << '\n';
    }
    return 0;
}

nlohmann::json classified_to_json(const ClassifiedDesign& row) {
    nlohmann::json j;
    j["type"] = group_type_name(row.type);
    j["n"] = row.n;
    j["t"] = row.t;
    j["J"] = row.J;
    j["family"] = row.family;
    if (row.family) j["free_class"] = row.free_class;
    j["cardinality"] = row.cardinality;
    j["bound"] = row.bound;
    j["resolved"] = row.resolved;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& a : row.samples)
        samples.push_back({{"radius2", scalar_map_to_json(a.radius2)},
                           {"weight", scalar_map_to_json(a.weight)}});
    j["samples"] = std::move(samples);
    return j;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    GroupType type = parse_group_type(opt.type_s);
    auto rows = classify_corner_designs(type, opt.nmax, opt.classify_tmax);
    if (opt.format == OutputFormat::json) {
        nlohmann::json j;
        j["type"] = group_type_name(type);
        j["n_max"] = opt.nmax;
        j["t_max"] = opt.classify_tmax;
        nlohmann::json list = nlohmann::json::array();
        for (const auto& row : rows) list.push_back(classified_to_json(row));
        j["designs"] = std::move(list);
        out << canonical_dump(j);
    } else if (opt.format == OutputFormat::csv) {
        out << "type,n,t,J,family,cardinality,bound\n";
        for (const auto& row : rows)
            out << group_type_name(row.type) << ',' << row.n << ',' << row.t << ','
                << csv_quote(join_ints(row.J)) << ',' << (row.family ? "true" : "false")
                << ',' << row.cardinality << ',' << row.bound << '\n';
    } else {
        out << "tight corner-orbit designs for " << group_type_name(type) << "_n, n <= "
            << opt.nmax << ", t <= " << opt.classify_tmax << ": " << rows.size()
            << " row(s)\n";
        for (const auto& row : rows) {
            out << "  " << group_type_name(row.type) << row.n << " t=" << row.t
                << " J=" << join_ints(row.J) << " |X|=" << row.cardinality
                << " bound=" << row.bound << (row.family ? " family" : "") << '\n';
            for (const auto& a : row.samples)
                out << "      r^2 = " << map_text(a.radius2) << "   w = "
                    << map_text(a.weight) << '\n';
        }
    }
    return 0;
}

int cmd_reproduce_tables(const Options& opt, std::ostream& out) {
    std::vector<std::pair<int, GroupType>> tables;
    for (int i = 1; i <= 3; ++i) {
        if (opt.table != 0 && opt.table != i) continue;
        tables.emplace_back(i, i == 1 ? GroupType::A : i == 2 ? GroupType::B : GroupType::D);
    }
    if (tables.empty()) throw scalar_error("--table must be 1, 2 or 3");

    std::vector<Rational> samples = default_family_samples();
    if (!opt.params.empty()) {
        samples.clear();
        for (const std::string& p : opt.params) {
            Scalar s = Scalar::parse(p);
            if (s.kind() != Scalar::Kind::rational)
                throw scalar_error("--param value '" + p + "' must be rational, e.g. 27/25");
            samples.push_back(s.rational());
        }
    }

    bool all_pass = true;
    nlohmann::json rows = nlohmann::json::array();
    for (auto [index, type] : tables) {
        int n_lo = min_rank(type);
        int n_hi = type == GroupType::D ? 8 : 7;
        for (const CatalogueInstance& inst : catalogue_instances(type, n_lo, n_hi, samples)) {
            WeightedDesign X = inst.design();
            ReflectionGroup G = build_group(inst.type, inst.n);
            // One invariant run at t+1 shows both certification at t and the
            // failure one degree higher; the two oracles then confirm t.
            int t_inv = strength_invariant(X, G, inst.t + 1).t_certified;
            int t_full = strength_full(X, inst.t).t_certified;
            int t_direct = strength_direct(X, inst.t).t_certified;
            TightnessReport tight = is_tight(X, inst.t);
            bool pass = t_inv == inst.t && t_full == inst.t && t_direct == inst.t &&
                        tight.tight;
            all_pass = all_pass && pass;
            if (opt.format == OutputFormat::json) {
                nlohmann::json j;
                j["table"] = index;
                j["label"] = inst.label;
                j["type"] = group_type_name(inst.type);
                j["n"] = inst.n;
                j["t"] = inst.t;
                j["J"] = inst.J;
                j["family"] = inst.family;
                if (inst.family) j["param"] = Scalar(inst.s).str();
                j["t_invariant"] = t_inv;
                j["t_full"] = t_full;
                j["t_direct"] = t_direct;
                j["size"] = tight.size;
                j["bound"] = tight.bound;
                j["tight"] = tight.tight;
                j["pass"] = pass;
                rows.push_back(std::move(j));
            } else if (opt.format == OutputFormat::csv) {
                out << index << ',' << csv_quote(inst.label) << ',' << inst.t << ','
                    << t_inv << ',' << t_full << ',' << t_direct << ',' << tight.size
                    << ',' << tight.bound << ',' << (pass ? "pass" : "FAIL") << '\n';
            } else {
                out << (pass ? "[pass] " : "[FAIL] ") << "table " << index << "  "
                    << inst.label << ": t=" << inst.t << " by all three methods"
                    << (t_inv == inst.t ? "" : " (invariant gave " + std::to_string(t_inv) + ")")
                    << (t_full == inst.t ? "" : " (full gave " + std::to_string(t_full) + ")")
                    << (t_direct == inst.t ? "" : " (direct gave " + std::to_string(t_direct) + ")")
                    << ", fails at " << inst.t + 1 << ", |X|=" << tight.size
                    << (tight.tight ? " meets bound " : " vs bound ") << tight.bound << '\n';
            }
        }
    }
    if (opt.format == OutputFormat::json) {
        nlohmann::json j;
        j["pass"] = all_pass;
        j["rows"] = std::move(rows);
        out << canonical_dump(j);
    } else if (opt.format == OutputFormat::text) {
        out << (all_pass ? "all rows reproduced\n" : "FAILURES above\n");
    }
    return all_pass ? 0 : 1;
}

int cmd_xu_build(const Options& opt, std::ostream& out) {
    RadialWeight W = parse_weight(opt.weight_s);
    XuFamily family = parse_xu_family(opt.family_s);
    XuFormula F = solve_moment_system(W, opt.n, family);
    std::string text = xu_formula_to_json_text(F);
    if (!opt.out_file.empty()) {
        std::ofstream f(opt.out_file);
        if (!f) throw scalar_error("cannot write '" + opt.out_file + "'");
        f << text;
        out << "wrote degree-" << F.degree() << " formula (" << F.circles()
            << " circle(s), " << F.angle_count() << " angles) to " << opt.out_file << '\n';
    } else {
        out << text;
    }
    return 0;
}

int cmd_xu_verify(const Options& opt, std::ostream& out) {
    std::ifstream in(opt.file);
    if (!in) throw scalar_error("cannot open formula file '" + opt.file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    XuFormula F = xu_formula_from_json_text(buf.str());
    RadialWeight W = parse_weight(opt.weight_s);
    int t = opt.verify_t > 0 ? opt.verify_t : F.degree();
    XuConditionReport cond = verify_conditions(F, W);
    XuDegreeReport deg = verify_degree(F, W, t);
    bool pass = cond.pass && deg.pass;
    if (opt.format == OutputFormat::json) {
        nlohmann::json j;
        j["file"] = opt.file;
        j["family"] = xu_family_name(F.family);
        j["n"] = F.n;
        j["weight"] = W.name;
        j["t"] = t;
        nlohmann::json cj;
        cj["pass"] = cond.pass;
        cj["max_residual"] = cond.max_residual;
        nlohmann::json crows = nlohmann::json::array();
        for (const auto& r : cond.rows)
            crows.push_back({{"kind", r.kind},
                             {"j", r.j},
                             {"extra", r.extra},
                             {"residual", r.residual},
                             {"ok", r.ok}});
        cj["rows"] = std::move(crows);
        j["conditions"] = std::move(cj);
        nlohmann::json dj;
        dj["pass"] = deg.pass;
        dj["monomials"] = deg.monomial_count;
        dj["invariants"] = deg.invariant_count;
        dj["max_residual_monomial"] = deg.max_residual_monomial;
        dj["max_residual_invariant"] = deg.max_residual_invariant;
        j["degree_check"] = std::move(dj);
        j["pass"] = pass;
        out << canonical_dump(j);
    } else if (opt.format == OutputFormat::csv) {
        out << "key,value\n";
        out << "family," << xu_family_name(F.family) << "\nn," << F.n << "\nt," << t << '\n';
        out << "conditions," << (cond.pass ? "pass" : "FAIL") << '\n';
        out << "conditions_max_residual," << cond.max_residual << '\n';
        out << "degree," << (deg.pass ? "pass" : "FAIL") << '\n';
        out << "pass," << (pass ? "true" : "false") << '\n';
    } else {
        out << "formula: family " << xu_family_name(F.family) << ", n=" << F.n << ", "
            << F.circles() << " circle(s), " << F.angle_count() << " angles"
            << (F.has_center() ? ", center point" : "") << '\n';
        out << "conditions: " << (cond.pass ? "pass" : "FAIL") << " (max residual "
            << cond.max_residual << ")\n";
        out << "degree " << t << ": " << (deg.pass ? "pass" : "FAIL") << " ("
            << deg.monomial_count << " monomials, " << deg.invariant_count
            << " dihedral invariants, max residuals " << deg.max_residual_monomial
            << " / " << deg.max_residual_invariant << ")\n";
        for (const auto& r : deg.failures)
            out << "  fails on " << (r.invariant ? "u^" : "x^") << r.a
                << (r.invariant ? " v^" : " y^") << r.b << " (residual " << r.residual
                << ")\n";
        out << "overall: " << (pass ? "pass" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
}

int cmd_molien(const Options& opt, std::ostream& out) {
    GroupType type = parse_group_type(opt.type_s);
    ReflectionGroup G = build_group(type, opt.rank);
    std::vector<long long> q = molien_dims(G, opt.degree);
    std::ostringstream series;
    bool first = true;
    for (size_t l = 0; l < q.size(); ++l) {
        if (!q[l]) continue;
        series << (first ? "" : " + ");
        if (q[l] != 1 || l == 0) series << q[l];
        if (l > 0) {
            if (q[l] != 1) series << '*';
            series << "t^" << l;
        }
        first = false;
    }
    if (opt.format == OutputFormat::json) {
        nlohmann::json j;
        j["type"] = group_type_name(type);
        j["rank"] = opt.rank;
        j["lmax"] = opt.degree;
        j["coefficients"] = q;
        j["series"] = series.str();
        out << canonical_dump(j);
    } else if (opt.format == OutputFormat::csv) {
        for (size_t l = 0; l < q.size(); ++l) out << (l ? "," : "") << q[l];
        out << '\n';
    } else {
        out << '(';
        for (size_t l = 0; l < q.size(); ++l) out << (l ? "," : "") << q[l];
        out << ")\n" << series.str() << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cubature formulas and Euclidean designs from reflection-group orbits"};
    app.require_subcommand(1);

    Options opt;
    unsigned precision = 256;
    bool precision_given = false;
    int tol_exp = 0;
    unsigned rank_cap = 0;
    std::string format_s;

    app.add_option("--precision", precision, "working precision in bits (>= 64)")
        ->each([&](const std::string&) { precision_given = true; });
    app.add_option("--tol-exp", tol_exp, "zero-test tolerance exponent (tolerance 2^-e)");
    app.add_option("--rank-cap", rank_cap, "maximum rank for orbit enumeration");
    app.add_option("--format", format_s, "output format: json, csv, or text");

    auto add_type_rank = [&](CLI::App* sub) {
        sub->add_option("--type", opt.type_s, "group type A, B, or D")->required();
        sub->add_option("--rank", opt.rank, "rank n")->required();
    };

    CLI::App* orbit = app.add_subcommand("orbit", "enumerate a corner-vector orbit");
    add_type_rank(orbit);
    orbit->add_option("--corner", opt.corner, "corner index k (1-based)")->required();
    orbit->add_flag("--json", opt.as_json, "emit JSON regardless of --format");

    CLI::App* harm = app.add_subcommand("harm-basis",
                                        "invariant harmonic basis in one degree");
    add_type_rank(harm);
    harm->add_option("--degree", opt.degree, "polynomial degree l")->required();
    harm->add_flag("--closed-form", opt.closed_form,
                   "print the closed-form invariants of this degree instead");

    CLI::App* check = app.add_subcommand("check-design",
                                         "certify the strength of a design file");
    check->add_option("file", opt.file, "design JSON file")->required();
    check->add_option("--tmax", opt.tmax, "largest strength to test (default 8)");
    check->add_option("--expect", opt.expect,
                      "exit 1 unless the certified strength equals this");

    CLI::App* fisher = app.add_subcommand("fisher", "Fisher-type cardinality bound");
    fisher->add_option("--n", opt.n, "ambient dimension")->required();
    fisher->add_option("--t", opt.t, "design strength")->required();
    fisher->add_option("--spheres", opt.spheres, "number of concentric spheres");
    fisher->add_flag("--origin", opt.origin, "the point set contains the origin");

    CLI::App* classify = app.add_subcommand("classify",
                                            "exhaustive tight-design search");
    classify->add_option("--type", opt.type_s, "group type A, B, or D")->required();
    classify->add_option("--nmax", opt.nmax, "largest rank to search")->required();
    classify->add_option("--tmax", opt.classify_tmax, "largest strength (default 7)");

    CLI::App* tables = app.add_subcommand("reproduce-tables",
                                          "re-certify every catalogued design row");
    tables->add_option("--table", opt.table, "restrict to table 1 (A), 2 (B) or 3 (D)");
    tables->add_option("--param", opt.params,
                       "family parameter sample(s), rational (repeatable)");

    CLI::App* xb = app.add_subcommand("xu-build",
                                      "solve for a radially symmetric cubature formula");
    xb->add_option("--weight", opt.weight_s, "radial weight: gaussian or unit_disk")
        ->required();
    xb->add_option("--n", opt.n, "degree parameter (degree 2n-1 or 2n)")->required();
    xb->add_option("--family", opt.family_s, "odd (degree 2n-1) or even (degree 2n)")
        ->required();
    xb->add_option("--out", opt.out_file, "write the formula JSON to this file");

    CLI::App* xv = app.add_subcommand("xu-verify", "verify a cubature formula file");
    xv->add_option("file", opt.file, "formula JSON file")->required();
    xv->add_option("--t", opt.verify_t, "degree to test (default: the formula's degree)");
    xv->add_option("--weight", opt.weight_s, "radial weight (default gaussian)");

    CLI::App* molien = app.add_subcommand("molien", "invariant harmonic dimensions");
    add_type_rank(molien);
    molien->add_option("--lmax", opt.degree, "largest degree")->required();

    for (CLI::App* sub : {orbit, harm, check, fisher, classify, tables, xb, xv, molien})
        sub->fallthrough();

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("orbit-designs");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        Config::set_precision_bits(precision);
        if (const char* env = std::getenv("ORBIT_DESIGNS_PRECISION"); env && *env) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0)
                Config::set_precision_bits(static_cast<unsigned>(v));
            else
                throw scalar_error(std::string("ORBIT_DESIGNS_PRECISION='") + env +
                                   "' is not a positive integer");
        }
        if (tol_exp > 0) Config::set_tolerance_exponent(tol_exp);
        if (rank_cap > 0) Config::set_orbit_rank_cap(rank_cap);
        if (!format_s.empty()) opt.format = parse_format(format_s);
        (void)precision_given;

        if (app.got_subcommand(orbit)) return cmd_orbit(opt, out);
        if (app.got_subcommand(harm)) return cmd_harm_basis(opt, out);
        if (app.got_subcommand(check)) return cmd_check_design(opt, out);
        if (app.got_subcommand(fisher)) return cmd_fisher(opt, out);
        if (app.got_subcommand(classify)) return cmd_classify(opt, out);
        if (app.got_subcommand(tables)) return cmd_reproduce_tables(opt, out);
        if (app.got_subcommand(xb)) return cmd_xu_build(opt, out);
        if (app.got_subcommand(xv)) return cmd_xu_verify(opt, out);
        if (app.got_subcommand(molien)) return cmd_molien(opt, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const xu_solve_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace orbitdesigns
