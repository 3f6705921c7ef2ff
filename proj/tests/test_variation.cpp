#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "estab/errors.hpp"
#include "estab/quadrature.hpp"
#include "estab/variation.hpp"

using namespace estab;
using std::numbers::pi;

// d^2/dt^2 E2c(phi_t) at t = 1, from 30-digit quadrature plus numerical
// differentiation in mpmath (independent of this library).
constexpr double kSecondDerivativeS5 = -180.869947301748951;
constexpr double kSecondDerivativeS6 = -680.366299727721768;
constexpr double kSecondDerivativeS7 = -1562.60416867045576;

TEST_CASE("spectral prediction, exact factor") {
  CHECK(prediction_factor(4) == 0);
  CHECK(spectral_prediction(4) == 0.0);
  CHECK(prediction_factor(5) == -7);
  CHECK(prediction_factor(2) == 0);
  CHECK(prediction_factor(3) == 1);
  CHECK_THROWS_AS(prediction_factor(1), DomainError);
}

TEST_CASE("spectral prediction values") {
  // -7 * vol(S^4) * (5 pi / 16) = -35 pi^3 / 6
  CHECK(spectral_prediction(5) == doctest::Approx(-35.0 * pi * pi * pi / 6.0).epsilon(1e-14));
  CHECK(spectral_prediction(5) == doctest::Approx(kSecondDerivativeS5).epsilon(1e-14));
  CHECK(spectral_prediction(6) == doctest::Approx(kSecondDerivativeS6).epsilon(1e-14));
  CHECK(spectral_prediction(7) == doctest::Approx(kSecondDerivativeS7).epsilon(1e-14));
  for (int m = 5; m <= 10; ++m) CHECK(spectral_prediction(m) < 0.0);
  // m = 3: |W|^2 = vol(S^2) * 3 pi / 8.
  CHECK(spectral_prediction(3) == doctest::Approx(1.5 * pi * pi).epsilon(1e-14));
  CHECK(variation_field_norm_sq(5) == doctest::Approx(5.0 * pi * pi * pi / 6.0).epsilon(1e-14));
}

TEST_CASE("finite-difference Hessian") {
  SUBCASE("m = 4 is flat") {
    const SecondVariationReport r = fd_second_derivative(4);
    CHECK(std::abs(r.fd_value) <= 1e-4);
    CHECK(r.sign_verdict == SignVerdict::Zero);
    CHECK(consistent(r));
  }
  SUBCASE("m = 5 matches -35 pi^3 / 6") {
    const SecondVariationReport r = fd_second_derivative(5);
    CHECK(std::abs(r.fd_value - kSecondDerivativeS5) / std::abs(kSecondDerivativeS5) <= 1e-3);
    CHECK(r.sign_verdict == SignVerdict::Negative);
    CHECK(r.relative_gap <= 1e-3);
    CHECK(r.fd_step_table.size() == 4);
  }
  SUBCASE("m = 6 is a local maximum") {
    const SecondVariationReport r = fd_second_derivative(6);
    CHECK(r.sign_verdict == SignVerdict::Negative);
    CHECK(r.relative_gap <= 1e-3);
    CHECK(r.fd_value < 0.0);
  }
  SUBCASE("low dimensions") {
    const SecondVariationReport r2 = fd_second_derivative(2);
    CHECK(r2.sign_verdict == SignVerdict::Zero);
    CHECK(consistent(r2));
    const SecondVariationReport r3 = fd_second_derivative(3);
    CHECK(r3.sign_verdict == SignVerdict::Positive);
    CHECK(consistent(r3));
  }
}

TEST_CASE("hessian consistency") {
  CHECK(hessian_consistency(4));
  CHECK(hessian_consistency(5));
  CHECK(hessian_consistency(7));
}

TEST_CASE("step table converges toward the prediction") {
  for (int m : {4, 5, 6}) {
    const SecondVariationReport r = fd_second_derivative(m);
    const auto& table = r.fd_step_table;
    REQUIRE(table.size() == 4);
    for (std::size_t i = 1; i < table.size(); ++i) {
      CHECK(table[i].step < table[i - 1].step);
      const double before = std::abs(table[i - 1].value - r.prediction);
      const double after = std::abs(table[i].value - r.prediction);
      CHECK(after <= before + table[i].noise + table[i - 1].noise + 1e-9);
    }
    // Richardson improves on the smallest raw step.
    CHECK(std::abs(r.fd_value - r.prediction) <=
          std::abs(table.back().value - r.prediction) + table.back().noise + 1e-9);
  }
}

TEST_CASE("step validation") {
  const std::vector<double> none;
  CHECK_THROWS_AS(fd_second_derivative(5, {}, none), DomainError);
  const std::vector<double> too_big{0.08, 0.6};
  CHECK_THROWS_AS(fd_second_derivative(5, {}, too_big), DomainError);
  const std::vector<double> single{0.01};
  const SecondVariationReport r = fd_second_derivative(5, {}, single);
  CHECK(r.fd_step_table.size() == 1);
  CHECK(r.relative_gap < 1e-3);
}

TEST_CASE("quadrature noise below the step is detected") {
  // Rounding in E2c ~ 1e-13 swamps the second difference at h = 1e-7.
  const std::vector<double> steps{0.08, 1e-7};
  CHECK_THROWS_AS(fd_second_derivative(5, {}, steps), StepTooSmall);
  const std::vector<double> fine_enough{0.08, 1e-4};
  CHECK_NOTHROW(fd_second_derivative(5, {}, fine_enough));
}
