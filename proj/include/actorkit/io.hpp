#pragma once

#include <string>

#include <json.hpp>

#include "actorkit/actor.hpp"
#include "actorkit/identity.hpp"

namespace actorkit {

/// Insertion-ordered JSON so emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// { "name", "field", "dim", "basis", "products": [{ "name", "entries":
/// [[i,j,k,"coeff"], ...] }] }; omitted entries are zero, indices 0-based.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);
Algebra load_algebra(const std::string& path);

/// { "name", "identities": [src], "products": 1|2, "lambda_mu": optional,
/// "preset": optional name overriding the rest }.
VarietyPreset variety_from_json(const Json& j);
VarietyPreset load_variety(const std::string& path);

/// Accepts a preset name (assoc, cassoc, lie, alt, abalg, pois) or a path to
/// a variety file.
VarietyPreset resolve_variety(const std::string& name_or_path);

Json matrix_to_json(const Matrix& m);
Json vec_to_json(const Vec& v);
Json subspace_to_json(const Subspace& s);
Json actor_element_to_json(const ActorElement& e);

Json read_json_file(const std::string& path);

}  // namespace actorkit
