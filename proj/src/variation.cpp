#include "estab/variation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "estab/core_stability.hpp"
#include "estab/errors.hpp"
#include "estab/json_writer.hpp"
#include "estab/sphere_family.hpp"

namespace estab {

std::string_view to_string(SignVerdict verdict) {
  switch (verdict) {
    case SignVerdict::Negative:
      return "negative";
    case SignVerdict::Zero:
      return "zero";
    case SignVerdict::Positive:
      return "positive";
  }
  return "?";
}

Rational prediction_factor(int m) {
  if (m < 2) {
    throw DomainError("spectral prediction needs m >= 2, got " + std::to_string(m));
  }
  // W = grad(-cos r) with Delta(-cos r) = m (-cos r) on the unit sphere.
  const EinsteinSpace unit_sphere(m, m - 1);
  return jacobi_eigenvalue(FunctionalKind::ConformalBienergy, unit_sphere, Rational(m));
}

double variation_field_norm_sq(int m) {
  if (m < 2) {
    throw DomainError("variation field norm needs m >= 2");
  }
  // |W|^2 = sin^2 r integrated against sin^{m-1} r dr dtheta.
  return sphere_volume(m - 1) * sin_power_integral(m + 1);
}

double spectral_prediction(int m) {
  const Rational factor = prediction_factor(m);
  if (factor == 0) {
    return 0.0;
  }
  return to_double(factor) * variation_field_norm_sq(m);
}

SecondVariationReport fd_second_derivative(int m, const QuadratureConfig& quad,
                                           std::span<const double> steps) {
  if (steps.empty()) {
    throw DomainError("fd_second_derivative needs at least one step");
  }
  for (double h : steps) {
    if (!(h > 0 && h < 0.5)) {
      throw DomainError("finite-difference steps must lie in (0, 0.5), got " + format_double(h));
    }
  }
  std::vector<double> ordered(steps.begin(), steps.end());
  std::sort(ordered.begin(), ordered.end(), std::greater<>());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  SecondVariationReport report;
  report.dimension = m;
  const Rational factor = prediction_factor(m);
  report.prediction = spectral_prediction(m);
  const double scale = std::max(1.0, std::abs(report.prediction));

  const FamilyEvaluation centre = evaluate_family(m, 1.0, quad);
  for (double h : ordered) {
    const FamilyEvaluation plus = evaluate_family(m, 1.0 + h, quad);
    const FamilyEvaluation minus = evaluate_family(m, 1.0 - h, quad);
    const double h2 = h * h;
    const double value = (plus.c_bienergy - 2.0 * centre.c_bienergy + minus.c_bienergy) / h2;
    const double noise =
        (plus.c_bienergy_error + 2.0 * centre.c_bienergy_error + minus.c_bienergy_error) / h2;
    report.fd_step_table.push_back({h, value, noise});
  }

  const auto& table = report.fd_step_table;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const double before = std::abs(table[i - 1].value - report.prediction);
    const double after = std::abs(table[i].value - report.prediction);
    if (after > before && table[i].noise > kZeroFdTolerance * scale) {
      throw StepTooSmall("step " + format_double(table[i].step) +
                         " is dominated by quadrature error (noise " +
                         format_double(table[i].noise) + ")");
    }
  }

  if (table.size() == 1) {
    report.fd_value = table.front().value;
  } else {
    // Central differences have an even error expansion in h.
    const StepValue& coarse = table[table.size() - 2];
    const StepValue& fine = table.back();
    const double q2 = (coarse.step / fine.step) * (coarse.step / fine.step);
    report.fd_value = (q2 * fine.value - coarse.value) / (q2 - 1.0);
  }

  report.relative_gap = std::abs(report.fd_value - report.prediction) / scale;
  if (factor == 0 || std::abs(report.prediction) < kZeroPredictionThreshold) {
    report.sign_verdict = SignVerdict::Zero;
  } else {
    report.sign_verdict = factor < 0 ? SignVerdict::Negative : SignVerdict::Positive;
  }
  return report;
}

bool consistent(const SecondVariationReport& report) {
  if (report.sign_verdict == SignVerdict::Zero) {
    return std::abs(report.fd_value) <= kZeroFdTolerance;
  }
  return report.relative_gap <= kRelativeGapTolerance;
}

bool hessian_consistency(int m, const QuadratureConfig& quad) {
  return consistent(fd_second_derivative(m, quad));
}

}  // namespace estab
