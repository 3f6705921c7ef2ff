#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace estab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", "-p/q" (optional surrounding whitespace). Throws
// ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline int sign(const Rational& value) {
  return value.sign();
}

}  // namespace estab
