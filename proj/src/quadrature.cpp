#include "estab/quadrature.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>

#include "estab/errors.hpp"

namespace estab {
namespace {

// Neumaier compensated summation; order of additions is fixed by the caller.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double composite(const Integrand& f, double a, double b, int panels,
                 const GaussLegendreRule& rule) {
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  CompensatedSum total;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    CompensatedSum panel;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + half * rule.nodes[i];
      const double y = f(x);
      if (!std::isfinite(y)) {
        throw NonFiniteSample("integrand returned " + std::to_string(y) + " at x = " +
                              std::to_string(x));
      }
      panel.add(rule.weights[i] * y);
    }
    total.add(half * panel.value());
  }
  return total.value();
}

}  // namespace

void QuadratureConfig::validate() const {
  if (base_nodes < 4) throw DomainError("base_nodes must be >= 4");
  if (initial_panels < 1) throw DomainError("initial_panels must be >= 1");
  if (max_doublings < 1) throw DomainError("max_doublings must be >= 1");
  if (!(rel_tolerance > 0) || !(abs_tolerance > 0)) {
    throw DomainError("quadrature tolerances must be > 0");
  }
}

QuadratureConfig QuadratureConfig::from_environment() {
  QuadratureConfig config;
  if (const char* raw = std::getenv("ESTAB_QUAD_RTOL"); raw != nullptr && *raw != '\0') {
    const std::string_view text(raw);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0) ||
        !std::isfinite(value)) {
      throw DomainError("ESTAB_QUAD_RTOL must be a positive number, got '" +
                        std::string(text) + "'");
    }
    config.rel_tolerance = value;
  }
  return config;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& config) {
  config.validate();
  if (!(a < b)) {
    throw DomainError("integrate needs a < b");
  }
  const GaussLegendreRule rule = gauss_legendre(config.base_nodes);
  int panels = config.initial_panels;
  double previous = composite(f, a, b, panels, rule);
  double difference = 0.0;
  for (int level = 1; level <= config.max_doublings; ++level) {
    panels *= 2;
    const double current = composite(f, a, b, panels, rule);
    difference = std::abs(current - previous);
    if (difference <= std::max(config.rel_tolerance * std::abs(current), config.abs_tolerance)) {
      return {current, difference, panels};
    }
    previous = current;
  }
  throw QuadratureFailure("no convergence on [" + std::to_string(a) + ", " + std::to_string(b) +
                          "] after " + std::to_string(config.max_doublings) +
                          " doublings; last difference " + std::to_string(difference));
}

IntegralResult integrate_piecewise(const Integrand& f, std::span<const double> breakpoints,
                                   const QuadratureConfig& config) {
  if (breakpoints.size() < 2) {
    throw DomainError("integrate_piecewise needs at least two breakpoints");
  }
  IntegralResult total;
  CompensatedSum value;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const IntegralResult piece = integrate(f, breakpoints[i], breakpoints[i + 1], config);
    value.add(piece.value);
    total.error_estimate += piece.error_estimate;
    total.panels_used += piece.panels_used;
  }
  total.value = value.value();
  return total;
}

double sphere_volume(int n) {
  if (n < 1) throw DomainError("sphere_volume needs n >= 1");
  // Gamma((n+1)/2) by the recursion Gamma(x+1) = x Gamma(x), seeded at
  // Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).
  const int twice_arg = n + 1;
  double gamma = (twice_arg % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (int twice_x = (twice_arg % 2 == 0) ? 2 : 1; twice_x < twice_arg; twice_x += 2) {
    gamma *= 0.5 * twice_x;
  }
  const double pi_power = (twice_arg % 2 == 0)
                              ? std::pow(std::numbers::pi, twice_arg / 2)
                              : std::pow(std::numbers::pi, twice_arg / 2) * std::sqrt(std::numbers::pi);
  return 2.0 * pi_power / gamma;
}

double sin_power_integral(int p) {
  if (p < 0) throw DomainError("sin_power_integral needs p >= 0");
  double ratio = 1.0;  // (p-1)!! / p!!
  for (int j = p; j >= 2; j -= 2) {
    ratio *= static_cast<double>(j - 1) / j;
  }
  return (p % 2 == 0 ? std::numbers::pi : 2.0) * ratio;
}

}  // namespace estab
