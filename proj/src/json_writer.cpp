#include "estab/json_writer.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

namespace estab {

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  }
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value,
                                 std::chars_format::general, 17);
  return std::string(buffer, end);
}

namespace {

void write_value(std::ostream& out, const Json& value, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(it.key()).dump() << ": ";
        write_value(out, it.value(), indent, depth + 1);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const Json& element : value) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write_value(out, element, indent, depth + 1);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = value.get<double>();
      // JSON has no inf/nan; emit null like nlohmann does.
      out << (std::isfinite(d) ? format_double(d) : "null");
      return;
    }
    default:
      out << value.dump();
  }
}

}  // namespace

void write_json(std::ostream& out, const Json& document, int indent) {
  write_value(out, document, indent, 0);
  out << "\n";
}

std::string to_json_text(const Json& document, int indent) {
  std::ostringstream out;
  write_json(out, document, indent);
  return out.str();
}

}  // namespace estab
