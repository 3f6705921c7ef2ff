#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "estab/quadrature.hpp"
#include "estab/rational.hpp"

namespace estab {

enum class SignVerdict { Negative, Zero, Positive };

std::string_view to_string(SignVerdict verdict);

inline constexpr double kDefaultSteps[] = {0.08, 0.04, 0.02, 0.01};

// Predictions below this magnitude are treated as zero.
inline constexpr double kZeroPredictionThreshold = 1e-12;
// |fd_value| bound accepted for an exactly zero prediction.
inline constexpr double kZeroFdTolerance = 1e-4;
// relative_gap bound accepted otherwise.
inline constexpr double kRelativeGapTolerance = 1e-3;

struct StepValue {
  double step;
  double value;
  // Quadrature error propagated through the second difference.
  double noise;
};

struct SecondVariationReport {
  int dimension = 0;
  double fd_value = 0.0;
  std::vector<StepValue> fd_step_table;  // steps descending
  double prediction = 0.0;
  double relative_gap = 0.0;
  SignVerdict sign_verdict = SignVerdict::Zero;
};

// Exact factor (mu - 2 lambda)(mu - (2/3)(6 - m) lambda) at mu = m,
// lambda = m - 1: the conformal-bienergy Jacobi eigenvalue of the field
// W = grad(-cos r) = sin(r) d/dr on the unit S^m.
Rational prediction_factor(int m);

// |W|^2 in L^2(S^m) = vol(S^{m-1}) * integral sin^{m+1}.
double variation_field_norm_sq(int m);

// d^2/dt^2 E2c(phi_t) at t = 1 from the spectrum: factor * |W|^2.
double spectral_prediction(int m);

// Central second differences of t -> E2c(phi_t) around t = 1, Richardson on
// the two smallest steps, compared with spectral_prediction.
SecondVariationReport fd_second_derivative(
    int m, const QuadratureConfig& quad = {},
    std::span<const double> steps = kDefaultSteps);

// True when the finite-difference Hessian matches the spectral prediction.
bool hessian_consistency(int m, const QuadratureConfig& quad = {});

bool consistent(const SecondVariationReport& report);

}  // namespace estab
