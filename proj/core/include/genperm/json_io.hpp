#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "genperm/minkowski.hpp"
#include "genperm/numbers.hpp"

namespace genperm {

using Json = nlohmann::ordered_json;

/// Collections travel as {"n": int, "entries": [{"subset": [ints 1-based],
/// "value": "p/q"}]}; vectors as arrays of "p/q" strings.

Json to_json(const SubsetCollection& collection);
SubsetCollection collection_from_json(const Json& j);

Json rational_vector_to_json(const std::vector<Rat>& v);
std::vector<Rat> rational_vector_from_json(const Json& j);

}  // namespace genperm
