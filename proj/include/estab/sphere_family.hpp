#pragma once

// The rotationally symmetric self-maps of S^m
//
//   phi_t(theta, r) = (theta, alpha_t(r)),  alpha_t(r) = 2 atan(t tan(r/2)),
//
// with phi_1 = Id, and the energy, bienergy and conformal bienergy along them.

#include <vector>

#include "estab/quadrature.hpp"

namespace estab {

inline constexpr double kMinFamilyParameter = 1e-8;
inline constexpr double kMaxFamilyParameter = 1e8;

struct FamilyPoint {
  int dimension;
  double parameter;

  // Throws DomainError unless dimension >= 2 and the parameter lies in
  // [kMinFamilyParameter, kMaxFamilyParameter].
  void validate() const;
};

// alpha_t(r) for r in [0, pi], t > 0; exact at both poles.
double alpha(double t, double r);

struct PointwiseDensities {
  double dphi_sq;  // |d phi_t|^2
  double tau_sq;   // |tau(phi_t)|^2
};

// Requires 0 < r < pi.
PointwiseDensities pointwise_densities(int m, double t, double r);

struct FamilyEvaluation {
  double energy = 0.0;
  double energy_error = 0.0;
  double bienergy = 0.0;
  double bienergy_error = 0.0;
  double c_bienergy = 0.0;
  double c_bienergy_error = 0.0;
};

// Break points on [0, pi] used for every integral along the family: the
// poles plus a geometric cluster around the layer where alpha_t = pi/2.
std::vector<double> family_breakpoints(double t);

FamilyEvaluation evaluate_family(int m, double t,
                                 const QuadratureConfig& quad = {});

// C = (2(m-2)^2 + m(m-1)(m-3)/3) vol(S^{m-1}), m >= 5.
double c_constant(int m);

struct EpsilonCertificate {
  double eta;
  double rho;
  double k;
  double delta;
  double delta_prime;
};

struct EpsilonSchedule {
  double t;
  EpsilonCertificate certificate;
};

// A parameter t with E2c(phi_t) < eps, built from the chain
// eta = eps/C, rho = pi - eta/2, K = tan(rho/2),
// delta = asin(sqrt(eta/(2 rho))) (< pi/2), delta' = tan(delta/2)/K, t = delta'/2.
EpsilonSchedule epsilon_schedule(int m, double eps);

// C * integral_0^pi sin^2(alpha_t(r)) dr, a strict upper bound for E2c.
IntegralResult upper_bound(int m, double t, const QuadratureConfig& quad = {});

}  // namespace estab
