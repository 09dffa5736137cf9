#pragma once

#include <nlohmann/json.hpp>

#include "herencode/class_spec.hpp"

namespace herencode::detail {

using Json = nlohmann::ordered_json;

Json pattern_to_json(const NamedPattern& p);
NamedPattern pattern_from_json(const Json& j);
Json class_spec_to_json_value(const ClassSpec& spec);
ClassSpec class_spec_from_json_value(const Json& j);

}  // namespace herencode::detail
