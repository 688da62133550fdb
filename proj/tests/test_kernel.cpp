#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "perpsim/kernel.hpp"

using namespace perpsim;

TEST_SUITE("kernel") {

TEST_CASE("upper endpoint") {
  CHECK(upper_endpoint(0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(upper_endpoint(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(upper_endpoint(0.5) == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK_THROWS_AS(upper_endpoint(-0.1), std::domain_error);
  CHECK_THROWS_AS(upper_endpoint(1.1), std::domain_error);
}

TEST_CASE("transition density values") {
  CHECK(transition_density(0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(transition_density(1.0, 1.0) == 0.0);
  CHECK(transition_density(0.5, 0.25) ==
        doctest::Approx(0.89442719099991588).epsilon(1e-15));
  // Below the state the coefficient is 1, above it 2, and past b_x it is 0.
  CHECK(transition_density(0.5, 0.1) ==
        doctest::Approx(1.0 / std::sqrt(2.25 - 0.4)).epsilon(1e-15));
  CHECK(transition_density(0.5, 0.6) == 0.0);
  CHECK_THROWS_AS(transition_density(-0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(transition_density(0.5, 1.5), std::domain_error);
}

TEST_CASE("transition density dominates the coupling density") {
  for (int i = 0; i <= 512; ++i) {
    const double x = i / 512.0;
    for (int j = 0; j <= 512; ++j) {
      const double t = j / 512.0;
      REQUIRE(transition_density(x, t) - dominating_density(t) >= -1e-12);
    }
  }
}

TEST_CASE("transition density at least one half below one quarter") {
  for (int i = 0; i <= 512; ++i) {
    const double x = i / 512.0;
    for (int j = 0; j < 128; ++j)
      REQUIRE(transition_density(x, j / 512.0) >= 0.5);
    REQUIRE(transition_density(x, 0.25 - 1e-9) >= 0.5);
  }
}

TEST_CASE("transition cdf values") {
  for (double x : {0.0, 0.3, 0.7, 1.0}) {
    CHECK(transition_cdf(x, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(transition_cdf(x, upper_endpoint(x)) == 1.0);
    CHECK(transition_cdf(x, x) == doctest::Approx(x).epsilon(1e-14));
  }
  CHECK(transition_cdf(0.3, 1.0) == 1.0);
  CHECK(transition_cdf(0.0, 0.19606781186547524) ==
        doctest::Approx(0.53553390593273762).epsilon(1e-15));
  CHECK_THROWS_AS(transition_cdf(0.5, -0.1), std::domain_error);
}

TEST_CASE("transition cdf is nondecreasing in y") {
  for (double x : {0.0, 0.2, 0.25, 0.6, 1.0}) {
    double prev = 0.0;
    for (int j = 1; j <= 512; ++j) {
      const double cur = transition_cdf(x, j / 512.0);
      REQUIRE(cur >= prev - 1e-15);
      prev = cur;
    }
  }
}

TEST_CASE("dominating density") {
  CHECK(dominating_density(0.0) == 0.5);
  CHECK(dominating_density(0.2499999) == 0.5);
  CHECK(dominating_density(0.25) == 0.0);
  CHECK(dominating_density(0.9) == 0.0);
  CHECK(kCouplingMass == 0.125);
  CHECK_THROWS_AS(dominating_density(-0.1), std::domain_error);
}

TEST_CASE("residual cdf values") {
  // For x <= 1/4, G_x(x) = (8/7)(x - x/2) = 4x/7.
  for (double x : {0.05, 0.1, 0.2, 0.25})
    CHECK(residual_cdf(x, x) == doctest::Approx(4.0 * x / 7.0).epsilon(1e-14));
  CHECK(residual_cdf(0.5, 0.36) == doctest::Approx(0.2).epsilon(1e-14));
  for (double x : {0.0, 0.4, 1.0}) {
    CHECK(residual_cdf(x, 0.0) == 0.0);
    CHECK(residual_cdf(x, upper_endpoint(x)) == 1.0);
  }
}

TEST_CASE("breakpoints") {
  const Breakpoints b0 = quantile_breakpoints(0.0);
  CHECK(b0.regime == Breakpoints::Regime::Low);
  CHECK(b0.cut1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(b0.cut2 == doctest::Approx(1.0).epsilon(1e-15));

  const Breakpoints bq = quantile_breakpoints(0.25);
  CHECK(bq.regime == Breakpoints::Regime::Low);
  CHECK(bq.cut1 == doctest::Approx(1.0 / 7.0).epsilon(1e-14));
  CHECK(bq.cut2 == doctest::Approx(1.0 / 7.0).epsilon(1e-14));

  const Breakpoints b1 = quantile_breakpoints(1.0);
  CHECK(b1.regime == Breakpoints::Regime::High);
  CHECK(b1.cut1 ==
        doctest::Approx(0.010256681389212975).epsilon(1e-13));
  CHECK(b1.cut2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("breakpoints match the residual cdf at the cut values") {
  for (int i = 0; i <= 512; ++i) {
    const double x = i / 512.0;
    const Breakpoints bp = quantile_breakpoints(x);
    REQUIRE(std::fabs(residual_cdf(x, std::min(x, 0.25)) - bp.cut1) <= 1e-12);
    REQUIRE(std::fabs(residual_cdf(x, std::max(x, 0.25)) - bp.cut2) <= 1e-12);
  }
}

TEST_CASE("residual quantile values") {
  for (double x : {0.0, 0.3, 0.7, 1.0}) {
    CHECK(residual_quantile(x, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(residual_quantile(x, 1.0) ==
          doctest::Approx(upper_endpoint(x)).epsilon(1e-13));
  }
  CHECK(residual_quantile(0.0, 0.5) ==
        doctest::Approx(0.19606781186547524).epsilon(1e-15));
  CHECK(residual_quantile(0.5, 0.2) == doctest::Approx(0.36).epsilon(1e-14));
  CHECK_THROWS_AS(residual_quantile(0.5, -0.1), std::domain_error);
  CHECK_THROWS_AS(residual_quantile(0.5, 1.1), std::domain_error);
}

TEST_CASE("residual quantile round trips through the residual cdf") {
  // Deterministic low-discrepancy sweep over (x, z).
  double worst_forward = 0.0;
  double worst_backward = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = std::fmod(0.6180339887498949 * (i + 1), 1.0);
    const double z = std::fmod(0.7548776662466927 * (i + 1), 1.0);
    const double y = residual_quantile(x, z);
    worst_forward =
        std::max(worst_forward, std::fabs(residual_cdf(x, y) - z));
    const double y0 = z * upper_endpoint(x);
    const double z0 = residual_cdf(x, y0);
    worst_backward =
        std::max(worst_backward, std::fabs(residual_quantile(x, z0) - y0));
  }
  CHECK(worst_forward <= 1e-9);
  CHECK(worst_backward <= 1e-9);
}

TEST_CASE("residual quantile is continuous across the regime boundary") {
  for (int j = 0; j <= 512; ++j) {
    const double z = j / 512.0;
    REQUIRE(std::fabs(residual_quantile(0.25 - 1e-9, z) -
                      residual_quantile(0.25 + 1e-9, z)) <= 1e-6);
  }
}

TEST_CASE("residual quantile is monotone in z") {
  for (double x : {0.0, 0.1, 0.25, 0.26, 0.5, 0.9, 1.0}) {
    double prev = residual_quantile(x, 0.0);
    for (int j = 1; j <= 512; ++j) {
      const double cur = residual_quantile(x, j / 512.0);
      REQUIRE(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

}  // TEST_SUITE
