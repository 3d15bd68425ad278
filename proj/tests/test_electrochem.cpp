#include <doctest.h>

#include <cmath>
#include <random>

#include "bmcoc/electrochem.hpp"
#include "bmcoc/error.hpp"
#include "oracles.hpp"

using namespace bmcoc;

TEST_CASE("pH after a single addition") {
  CHECK(std::abs(ph_after_addition(9.0, 2.27e-8) - 7.62) <= 0.005);
  CHECK(std::abs(ph_after_addition(7.0, 2.27e-8) - 6.91) <= 0.005);
  CHECK(ph_after_addition(9.0, 2.27e-8) == doctest::Approx(oracle::ph_after(9.0, 2.27e-8)).epsilon(1e-14));
  CHECK(ph_after_addition(8.0, 0.0) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK_THROWS_AS(ph_after_addition(9.0, -1e-9), InvalidArgument);
  CHECK_THROWS_AS(ph_after_addition(15.0, 1e-9), InvalidArgument);
}

TEST_CASE("pH is strictly decreasing in the addition") {
  double prev = ph_after_addition(9.0, 0.0);
  for (int i = 1; i <= 200; ++i) {
    const double v = ph_after_addition(9.0, 1e-10 * i);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("current from pH") {
  CHECK(std::abs(current_from_ph(8.5, kDefaultPhFit) - 0.45) <= 0.01);
  CHECK(current_from_ph(7.0, kDefaultPhFit) == doctest::Approx(-0.3219 * 7.0 + 3.1867).epsilon(1e-15));
  CHECK(current_from_ph(7.0, kDefaultPhFit) == doctest::Approx(0.9334).epsilon(1e-12));
  const CalibrationFit flat{0.0, 1.5, FitKind::PhCurrent};
  for (double pH : {4.0, 7.0, 10.0}) CHECK(current_from_ph(pH, flat) == 1.5);
  CHECK_THROWS_AS(current_from_ph(7.0, CalibrationFit{1.0, 0.0, FitKind::O2Current}), InvalidArgument);
  const SimParams p;
  CHECK(ph_fit(p).slope == kDefaultPhFit.slope);
  CHECK(ph_fit(p).intercept == kDefaultPhFit.intercept);
}

TEST_CASE("current is affine in pH") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(2.0, 12.0);
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng);
    const double lhs = current_from_ph(a, kDefaultPhFit) - current_from_ph(b, kDefaultPhFit);
    CHECK(lhs == doctest::Approx(kDefaultPhFit.slope * (a - b)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("oxygen sensor fit") {
  const CalibrationFit zero{2.0, 0.0, FitKind::O2Current};
  CHECK(o2_current(0.0, zero).current == 0.0);
  CHECK(o2_current(0.0, zero).extrapolated);
  CHECK_FALSE(o2_current(4.0, zero).extrapolated);
  CHECK(o2_current(9.0, zero).extrapolated);
  const double c = 3.0;
  CHECK(o2_current(2 * c, zero).current - o2_current(c, zero).current == doctest::Approx(zero.slope * c));

  const auto fit = fit_two_points(0.5, 1.25, 8.8, -0.4, FitKind::O2Current);
  CHECK(o2_current(0.5, fit).current == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(o2_current(8.8, fit).current == doctest::Approx(-0.4).epsilon(1e-14));
  CHECK_THROWS_AS(fit_two_points(1.0, 0.0, 1.0, 2.0, FitKind::O2Current), InvalidArgument);
  CHECK_THROWS_AS(o2_current(1.0, kDefaultPhFit), InvalidArgument);
}

TEST_CASE("saturation curve") {
  const auto s = saturation_curve(2.27e-8, 25, 9.0);
  REQUIRE(s.size() == 25);
  CHECK(std::abs(s[0] - 7.62) <= 0.01);
  CHECK(std::abs(s[1] - 7.33) <= 0.01);
  double base = 9.0;
  for (double v : s) {
    base = oracle::ph_after(base, 2.27e-8);
    CHECK(v == doctest::Approx(base).epsilon(1e-13));
  }
  double prev_step = 9.0 - s[0];
  for (std::size_t k = 1; k < s.size(); ++k) {
    CHECK(s[k] < s[k - 1]);
    const double step = s[k - 1] - s[k];
    CHECK(step < prev_step);
    prev_step = step;
  }
  const auto flat = saturation_curve(0.0, 5, 9.0);
  for (double v : flat) CHECK(v == doctest::Approx(9.0).epsilon(1e-15));
  CHECK_THROWS_AS(saturation_curve(1e-8, 0, 9.0), InvalidArgument);
}
