#pragma once

// The verification suites behind `estab-cli verify` and the acceptance
// binary. Every tolerance is fixed here.

#include <string>
#include <string_view>
#include <vector>

#include "estab/quadrature.hpp"

namespace estab {

enum class Suite { Tables, Constancy, Hessian, Epsilon, Bounds, Symmetry };

inline constexpr Suite kAllSuites[] = {Suite::Tables,  Suite::Constancy, Suite::Hessian,
                                       Suite::Epsilon, Suite::Bounds,    Suite::Symmetry};

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view text);  // throws DomainError

struct CheckResult {
  std::string suite;
  int criterion = 0;  // acceptance criterion number, 1..7
  std::string name;
  std::string expected;
  std::string got;
  double tolerance = 0.0;
  bool passed = false;
};

namespace tolerance {
inline constexpr double kConstancy = 1e-8;      // relative
inline constexpr double kSpotRelative = 1e-8;   // relative
inline constexpr double kSpotAbsolute = 1e-10;  // absolute
inline constexpr double kSymmetry = 1e-9;       // relative to max(1, |value|)
inline constexpr int kScalingSamples = 50;
}  // namespace tolerance

std::vector<CheckResult> run_suite(Suite suite, const QuadratureConfig& quad = {});

}  // namespace estab
