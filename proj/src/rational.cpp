#include "estab/rational.hpp"

#include <cctype>
#include <string>

#include "estab/errors.hpp"

namespace estab {
namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

BigInt parse_integer(std::string_view digits, bool allow_sign, std::string_view whole) {
  bool negative = false;
  if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  BigInt value{std::string(digits)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(body, true, text));
  }
  const BigInt numerator = parse_integer(body.substr(0, slash), true, text);
  const BigInt denominator = parse_integer(body.substr(slash + 1), false, text);
  if (denominator == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(numerator, denominator);
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace estab
