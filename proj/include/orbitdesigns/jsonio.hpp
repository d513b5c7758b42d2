#pragma once
// Canonical JSON encoding shared by the file formats: scalars are objects
// {"mode": "rational"|"quadratic"|"bigfloat", "value": "<string>"} so exact
// values survive round trips, and dumps are byte-stable (sorted keys, fixed
// indentation).

#include "orbitdesigns/designs.hpp"

#include "json.hpp"

namespace orbitdesigns {

nlohmann::json scalar_to_json(const Scalar& v);
Scalar scalar_from_json(const nlohmann::json& j);

// Also accepts the shorthand a hand-written file may use: a bare string
// ("27/25", "1.5", "1+2*sqrt(5)") or a JSON number.
Scalar scalar_from_json_flex(const nlohmann::json& j);

// {"1": <scalar>, "3": <scalar>} keyed by orbit index.
std::map<int, Scalar> scalar_map_from_json(const nlohmann::json& j, const char* what);
nlohmann::json scalar_map_to_json(const std::map<int, Scalar>& m);

// Design files: either the orbit form {type, rank, J, radii, weights} or the
// explicit form {points, weights}.
WeightedDesign design_from_json(const nlohmann::json& j);

std::string canonical_dump(const nlohmann::json& j);

}  // namespace orbitdesigns
