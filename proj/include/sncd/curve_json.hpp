#pragma once

#include <json.hpp>

#include "sncd/curve.hpp"
#include "sncd/integer.hpp"

namespace sncd {

using Json = nlohmann::ordered_json;

Json curve_to_json(const SncdCurve& curve);
/// `where` prefixes field names in ParseError messages.
SncdCurve curve_from_json(const Json& doc, const std::string& where = "");

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_to_json(const Integer& z);

}  // namespace sncd
