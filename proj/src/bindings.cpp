#include "orbitdesigns/catalogue.hpp"
#include "orbitdesigns/cli.hpp"
#include "orbitdesigns/jsonio.hpp"
#include "orbitdesigns/xu.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace orbitdesigns;

namespace {

RadialWeight weight_by_name(const std::string& s) {
    if (s == "gaussian") return RadialWeight::gaussian();
    if (s == "unit_disk" || s == "unit-disk") return RadialWeight::unit_disk();
    throw scalar_error("unknown weight '" + s + "' (expected gaussian or unit_disk)");
}

py::dict orbit_dict(const std::string& type, int rank, int k) {
    ReflectionGroup G = build_group(parse_group_type(type), rank);
    Orbit o = corner_orbit(G, k);
    py::list points;
    for (const Vec& x : o.points) {
        py::list row;
        for (const Scalar& c : x) row.append(c.str());
        points.append(std::move(row));
    }
    py::dict d;
    d["size"] = o.size();
    d["norm2"] = o.norm2.str();
    d["points"] = std::move(points);
    return d;
}

py::dict strength_dict(const std::string& design_json, int tmax) {
    WeightedDesign X = design_from_json(nlohmann::json::parse(design_json));
    StrengthReport full = strength_full(X, tmax);
    StrengthReport direct = strength_direct(X, tmax);
    py::dict d;
    d["n"] = X.n;
    d["size"] = X.size();
    d["full"] = full.t_certified;
    d["direct"] = direct.t_certified;
    bool agree = full.t_certified == direct.t_certified;
    if (X.orbit_based) {
        ReflectionGroup G = build_group(X.type, X.rank);
        StrengthReport inv = strength_invariant(X, G, tmax);
        d["invariant"] = inv.t_certified;
        agree = agree && inv.t_certified == full.t_certified;
    }
    d["agree"] = agree;
    d["t"] = full.t_certified;
    if (agree && full.t_certified >= 1) {
        TightnessReport tight = is_tight(X, full.t_certified);
        d["bound"] = tight.bound;
        d["tight"] = tight.tight;
    }
    return d;
}

py::list classify_list(const std::string& type, int nmax, int tmax) {
    py::list rows;
    for (const auto& row : classify_corner_designs(parse_group_type(type), nmax, tmax)) {
        py::dict d;
        d["type"] = group_type_name(row.type);
        d["n"] = row.n;
        d["t"] = row.t;
        d["J"] = row.J;
        d["family"] = row.family;
        d["cardinality"] = row.cardinality;
        d["bound"] = row.bound;
        py::list samples;
        for (const auto& a : row.samples) {
            py::dict s, r2, w;
            for (const auto& [k, v] : a.radius2) r2[py::int_(k)] = v.str();
            for (const auto& [k, v] : a.weight) w[py::int_(k)] = v.str();
            s["radius2"] = std::move(r2);
            s["weight"] = std::move(w);
            samples.append(std::move(s));
        }
        d["samples"] = std::move(samples);
        rows.append(std::move(d));
    }
    return rows;
}

py::dict xu_verify_dict(const std::string& formula_json, const std::string& weight, int t) {
    XuFormula F = xu_formula_from_json_text(formula_json);
    RadialWeight W = weight_by_name(weight);
    if (t <= 0) t = F.degree();
    XuConditionReport cond = verify_conditions(F, W);
    XuDegreeReport deg = verify_degree(F, W, t);
    py::dict d;
    d["family"] = xu_family_name(F.family);
    d["n"] = F.n;
    d["degree"] = F.degree();
    d["t"] = t;
    d["conditions_pass"] = cond.pass;
    d["conditions_max_residual"] = cond.max_residual;
    d["degree_pass"] = deg.pass;
    d["monomials"] = deg.monomial_count;
    d["invariants"] = deg.invariant_count;
    d["max_residual_monomial"] = deg.max_residual_monomial;
    d["max_residual_invariant"] = deg.max_residual_invariant;
    d["pass"] = cond.pass && deg.pass;
    return d;
}

py::tuple run_tuple(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cubature formulas and Euclidean designs from reflection-group orbits";
    m.attr("__version__") = "0.1.0";

    m.def("set_precision", &Config::set_precision_bits, py::arg("bits"),
          "Set the working bigfloat precision in bits (>= 64).");
    m.def("precision", &Config::precision_bits, "Current precision in bits.");

    m.def("run", &run_tuple, py::arg("args"),
          "Run one CLI invocation; returns (exit_code, stdout, stderr).");

    m.def(
        "molien",
        [](const std::string& type, int rank, int lmax) {
            return molien_dims(build_group(parse_group_type(type), rank), lmax);
        },
        py::arg("type"), py::arg("rank"), py::arg("lmax"),
        "Dimensions of the invariant harmonic spaces in degrees 0..lmax.");

    m.def(
        "group_order",
        [](const std::string& type, int rank) {
            return build_group(parse_group_type(type), rank).order;
        },
        py::arg("type"), py::arg("rank"));

    m.def(
        "exponents",
        [](const std::string& type, int rank) {
            return build_group(parse_group_type(type), rank).exponents;
        },
        py::arg("type"), py::arg("rank"));

    m.def("orbit", &orbit_dict, py::arg("type"), py::arg("rank"), py::arg("corner"),
          "Corner-vector orbit: {'size', 'norm2', 'points'} with exact coordinates.");

    m.def(
        "orbit_size",
        [](const std::string& type, int rank, int k) {
            return corner_orbit_size(parse_group_type(type), rank, k);
        },
        py::arg("type"), py::arg("rank"), py::arg("corner"),
        "Closed-form orbit size N_k.");

    m.def(
        "harm_basis",
        [](const std::string& type, int rank, int degree) {
            std::vector<std::string> out;
            ReflectionGroup G = build_group(parse_group_type(type), rank);
            for (const MultiPoly& f : invariant_harm_basis(G, degree))
                out.push_back(f.str());
            return out;
        },
        py::arg("type"), py::arg("rank"), py::arg("degree"),
        "Canonical invariant harmonic basis, one text polynomial per element.");

    m.def(
        "closed_forms",
        [](const std::string& type, int rank, int degree) {
            std::map<std::string, std::string> out;
            GroupType gt = parse_group_type(type);
            for (const std::string& label : closed_form_labels(gt, rank, degree))
                out[label] = closed_form_invariant(gt, rank, label).str();
            return out;
        },
        py::arg("type"), py::arg("rank"), py::arg("degree"),
        "Closed-form invariants of one degree as {label: text}.");

    m.def(
        "fisher",
        [](int n, int t, int spheres, bool origin) {
            Parity parity = t % 2 == 0 ? Parity::even : Parity::odd;
            return fisher_bound(n, (t + 1) / 2, parity, spheres, origin, origin);
        },
        py::arg("n"), py::arg("t"), py::arg("spheres") = 1, py::arg("origin") = false,
        "Fisher-type lower bound on the cardinality of a Euclidean t-design.");

    m.def("strength", &strength_dict, py::arg("design_json"), py::arg("tmax") = 8,
          "Certify a design given as JSON text; returns per-method strengths.");

    m.def("classify", &classify_list, py::arg("type"), py::arg("nmax"),
          py::arg("tmax") = 7, "Exhaustive tight corner-orbit design search.");

    m.def(
        "xu_build",
        [](const std::string& weight, int n, const std::string& family) {
            return xu_formula_to_json_text(
                solve_moment_system(weight_by_name(weight), n, parse_xu_family(family)));
        },
        py::arg("weight"), py::arg("n"), py::arg("family"),
        "Solve for a radially symmetric cubature formula; returns formula JSON.");

    m.def("xu_verify", &xu_verify_dict, py::arg("formula_json"),
          py::arg("weight") = "gaussian", py::arg("t") = 0,
          "Verify a cubature formula's conditions and its polynomial degree.");
}
