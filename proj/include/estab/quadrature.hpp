#pragma once

#include <functional>
#include <span>
#include <vector>

namespace estab {

struct QuadratureConfig {
  int base_nodes = 16;
  int initial_panels = 8;
  int max_doublings = 12;
  double rel_tolerance = 1e-11;
  double abs_tolerance = 1e-14;

  // Throws DomainError if an invariant is broken.
  void validate() const;

  // Defaults, with rel_tolerance overridden by ESTAB_QUAD_RTOL when set.
  static QuadratureConfig from_environment();
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels_used = 0;
};

struct GaussLegendreRule {
  std::vector<double> nodes;  // on (-1, 1), ascending
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

using Integrand = std::function<double(double)>;

// Composite Gauss-Legendre on [a, b]; the panel count doubles until two
// successive levels agree to rel_tolerance (or abs_tolerance). Endpoints are
// never sampled. Throws QuadratureFailure, NonFiniteSample.
IntegralResult integrate(const Integrand& f, double a, double b,
                         const QuadratureConfig& config = {});

// Sum of `integrate` over consecutive breakpoint intervals.
IntegralResult integrate_piecewise(const Integrand& f,
                                   std::span<const double> breakpoints,
                                   const QuadratureConfig& config = {});

// Volume of the unit sphere S^n in R^{n+1}.
double sphere_volume(int n);

// Integral of sin^p over [0, pi], Wallis closed form.
double sin_power_integral(int p);

}  // namespace estab
