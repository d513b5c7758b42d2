#include "orbitdesigns/jsonio.hpp"

namespace orbitdesigns {

namespace {

const char* kind_name(Scalar::Kind k) {
    switch (k) {
        case Scalar::Kind::rational: return "rational";
        case Scalar::Kind::quadratic: return "quadratic";
        default: return "bigfloat";
    }
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& v) {
    return nlohmann::json{{"mode", kind_name(v.kind())}, {"value", v.str()}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("value"))
        throw scalar_error("scalar JSON must be {\"mode\", \"value\"}");
    const std::string mode = j.at("mode").get<std::string>();
    const std::string value = j.at("value").get<std::string>();
    if (mode == "bigfloat") {
        Config::ensure();
        try {
            return Scalar(BigFloat(value));
        } catch (const std::exception&) {
            throw scalar_error("bad bigfloat literal '" + value + "'");
        }
    }
    if (mode != "rational" && mode != "quadratic")
        throw scalar_error("unknown scalar mode '" + mode + "'");
    Scalar v = Scalar::parse(value);
    if (mode == "rational" && v.kind() != Scalar::Kind::rational)
        throw scalar_error("value '" + value + "' is not rational");
    return v;
}

Scalar scalar_from_json_flex(const nlohmann::json& j) {
    if (j.is_object()) return scalar_from_json(j);
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
    if (j.is_number_float()) {
        Config::ensure();
        return Scalar(BigFloat(j.dump()));
    }
    throw scalar_error("expected a scalar (mode/value object, string, or number)");
}

std::map<int, Scalar> scalar_map_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_object())
        throw scalar_error(std::string(what) + " must be an object keyed by orbit index");
    std::map<int, Scalar> out;
    for (const auto& [key, val] : j.items()) {
        size_t pos = 0;
        int k = std::stoi(key, &pos);
        if (pos != key.size() || k < 1)
            throw scalar_error(std::string(what) + " key '" + key +
                               "' is not a positive integer");
        out.emplace(k, scalar_from_json_flex(val));
    }
    return out;
}

nlohmann::json scalar_map_to_json(const std::map<int, Scalar>& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = scalar_to_json(v);
    return j;
}

WeightedDesign design_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw scalar_error("design file must hold a JSON object");
    if (j.contains("points")) {
        if (!j.contains("weights")) throw scalar_error("explicit design needs \"weights\"");
        std::vector<Vec> pts;
        for (const auto& row : j.at("points")) {
            Vec x;
            for (const auto& c : row) x.push_back(scalar_from_json_flex(c));
            pts.push_back(std::move(x));
        }
        std::vector<Scalar> ws;
        for (const auto& w : j.at("weights")) ws.push_back(scalar_from_json_flex(w));
        return make_explicit_design(pts, ws);
    }
    for (const char* key : {"type", "rank", "J", "radii", "weights"})
        if (!j.contains(key))
            throw scalar_error(std::string("design file missing \"") + key + "\"");
    GroupType type = parse_group_type(j.at("type").get<std::string>());
    int rank = j.at("rank").get<int>();
    std::vector<int> J = j.at("J").get<std::vector<int>>();
    auto radii = scalar_map_from_json(j.at("radii"), "radii");
    auto weights = scalar_map_from_json(j.at("weights"), "weights");
    return make_orbit_design(type, rank, J, radii, weights);
}

std::string canonical_dump(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace orbitdesigns
