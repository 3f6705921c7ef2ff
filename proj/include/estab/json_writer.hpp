#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

namespace estab {

using Json = nlohmann::ordered_json;

// 17 significant digits, '.' separator, locale-independent.
std::string format_double(double value);

// Pretty-prints with fixed member order and format_double for floats, so
// identical documents serialize byte-identically.
void write_json(std::ostream& out, const Json& document, int indent = 2);
std::string to_json_text(const Json& document, int indent = 2);

}  // namespace estab
