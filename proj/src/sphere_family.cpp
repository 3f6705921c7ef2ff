#include "estab/sphere_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "estab/errors.hpp"

namespace estab {
namespace {

constexpr double kPi = std::numbers::pi;

void require_parameter(double t) {
  if (!(t >= kMinFamilyParameter && t <= kMaxFamilyParameter)) {
    throw DomainError("family parameter t = " + std::to_string(t) + " outside [1e-8, 1e8]");
  }
}

// Rational expressions in x = tan(r/2), or in y = tan((pi - r)/2) on the
// southern half so that nothing cancels near either pole:
//   sin r              = 2x / (1 + x^2)
//   sin a / sin r      = t (1 + x^2) / (1 + t^2 x^2)
//   (cos a - cos r) / sin r = x (1 - t^2) / (1 + t^2 x^2)
//   sin a              = 2 t x / (1 + t^2 x^2)
struct Profile {
  double sin_r;
  double ratio;       // alpha_t'(r)
  double cos_excess;  // (cos alpha - cos r) / sin r
  double sin_alpha;
};

Profile profile(double t, double r) {
  if (r <= 0.5 * kPi) {
    const double x = std::tan(0.5 * r);
    const double denom = 1.0 + t * t * x * x;
    return {2.0 * x / (1.0 + x * x), t * (1.0 + x * x) / denom, x * (1.0 - t * t) / denom,
            2.0 * t * x / denom};
  }
  const double y = std::tan(0.5 * (kPi - r));
  const double denom = y * y + t * t;
  return {2.0 * y / (1.0 + y * y), t * (y * y + 1.0) / denom, y * (1.0 - t * t) / denom,
          2.0 * t * y / denom};
}

}  // namespace

void FamilyPoint::validate() const {
  if (dimension < 2) {
    throw DomainError("family needs dimension >= 2, got " + std::to_string(dimension));
  }
  require_parameter(parameter);
}

double alpha(double t, double r) {
  if (!(t > 0) || !std::isfinite(t)) {
    throw DomainError("alpha needs t > 0");
  }
  if (!(r >= 0 && r <= kPi)) {
    throw DomainError("alpha needs r in [0, pi], got " + std::to_string(r));
  }
  if (r == 0.0) return 0.0;
  if (r == kPi) return kPi;
  if (r <= 0.5 * kPi) {
    return 2.0 * std::atan(t * std::tan(0.5 * r));
  }
  return kPi - 2.0 * std::atan(std::tan(0.5 * (kPi - r)) / t);
}

PointwiseDensities pointwise_densities(int m, double t, double r) {
  if (!(t > 0) || !std::isfinite(t)) {
    throw DomainError("densities need t > 0");
  }
  if (!(r > 0 && r < kPi)) {
    throw DomainError("densities are defined on the open interval (0, pi)");
  }
  const Profile p = profile(t, r);
  const double ratio_sq = p.ratio * p.ratio;
  const double k = m - 2.0;
  return {m * ratio_sq, k * k * ratio_sq * p.cos_excess * p.cos_excess};
}

std::vector<double> family_breakpoints(double t) {
  std::vector<double> points{0.0, kPi};
  if (t != 1.0) {
    const double centre = 2.0 * std::atan(1.0 / t);
    const double width = 2.0 * std::min(t, 1.0 / t);
    points.push_back(centre);
    for (double offset = width; offset < kPi; offset *= 4.0) {
      if (centre + offset + 0.5 * width < kPi) points.push_back(centre + offset);
      if (centre - offset - 0.5 * width > 0.0) points.push_back(centre - offset);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

FamilyEvaluation evaluate_family(int m, double t, const QuadratureConfig& quad) {
  FamilyPoint{m, t}.validate();
  const double half_volume = 0.5 * sphere_volume(m - 1);
  const double tension_weight = (m - 2.0) * (m - 2.0);
  const double conformal_weight = 2.0 / 3.0 * (m - 1.0) * (m - 3.0);
  const std::vector<double> breaks = family_breakpoints(t);

  // Every integrand is a density times the volume factor sin^{m-1} r.
  auto volume = [m](const Profile& p) { return std::pow(p.sin_r, m - 1); };
  const IntegralResult energy = integrate_piecewise(
      [&](double r) {
        const Profile p = profile(t, r);
        return m * p.ratio * p.ratio * volume(p);
      },
      breaks, quad);
  const IntegralResult bienergy = integrate_piecewise(
      [&](double r) {
        const Profile p = profile(t, r);
        const double tension = p.ratio * p.cos_excess;
        return tension_weight * tension * tension * volume(p);
      },
      breaks, quad);
  const IntegralResult c_bienergy = integrate_piecewise(
      [&](double r) {
        const Profile p = profile(t, r);
        const double ratio_sq = p.ratio * p.ratio;
        return ratio_sq *
               (tension_weight * p.cos_excess * p.cos_excess + conformal_weight * m) * volume(p);
      },
      breaks, quad);

  return {half_volume * energy.value,     half_volume * energy.error_estimate,
          half_volume * bienergy.value,   half_volume * bienergy.error_estimate,
          half_volume * c_bienergy.value, half_volume * c_bienergy.error_estimate};
}

double c_constant(int m) {
  if (m < 5) {
    throw DomainError("the c-bienergy estimate needs m >= 5, got " + std::to_string(m));
  }
  const double k = m - 2.0;
  return (2.0 * k * k + m * (m - 1.0) * (m - 3.0) / 3.0) * sphere_volume(m - 1);
}

EpsilonSchedule epsilon_schedule(int m, double eps) {
  if (!(eps > 0) || !std::isfinite(eps)) {
    throw DomainError("epsilon must be a positive finite number");
  }
  const double c = c_constant(m);
  // eta <= pi keeps rho >= pi/2 and eta/(2 rho) <= 1; shrinking eta only
  // tightens the estimate.
  const double eta = std::min(eps / c, kPi);
  const double rho = kPi - 0.5 * eta;
  // tan(rho/2) = cot(eta/4), evaluated without the pole at pi/2.
  const double k = 1.0 / std::tan(0.25 * eta);
  double delta = std::asin(std::min(1.0, std::sqrt(eta / (2.0 * rho))));
  delta = std::min(delta, std::nextafter(0.5 * kPi, 0.0));
  const double delta_prime = std::tan(0.5 * delta) / k;
  return {0.5 * delta_prime, {eta, rho, k, delta, delta_prime}};
}

IntegralResult upper_bound(int m, double t, const QuadratureConfig& quad) {
  const double c = c_constant(m);
  require_parameter(t);
  IntegralResult result = integrate_piecewise(
      [t](double r) {
        const double s = profile(t, r).sin_alpha;
        return s * s;
      },
      family_breakpoints(t), quad);
  result.value *= c;
  result.error_estimate *= c;
  return result;
}

}  // namespace estab
