#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "perpsim/kernel.hpp"
#include "perpsim/oracle.hpp"
#include "perpsim/rng.hpp"

using namespace perpsim;

TEST_SUITE("oracle") {

TEST_CASE("bisection inverts the residual cdf") {
  CHECK(std::fabs(quantile_by_bisection(0.0, 0.5) - 0.19606781186547524) <=
        1e-11);
  for (double x : {0.0, 0.3, 0.8, 1.0}) {
    CHECK(std::fabs(quantile_by_bisection(x, 0.0)) <= 1e-11);
    CHECK(std::fabs(quantile_by_bisection(x, 1.0) - upper_endpoint(x)) <=
          1e-11);
  }
  CHECK_THROWS_AS(quantile_by_bisection(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(quantile_by_bisection(0.5, 1.5), std::domain_error);
  CHECK_THROWS_AS(quantile_by_bisection(0.5, 0.5, 0.0),
                  std::invalid_argument);
  // A tolerance no bracket can reach trips the iteration cap.
  CHECK_THROWS_AS(quantile_by_bisection(0.5, 0.5, 1e-300),
                  std::runtime_error);
}

TEST_CASE("bisection agrees with the closed-form quantile") {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = std::fmod(0.6180339887498949 * (i + 1), 1.0);
    const double z = std::fmod(0.5545497100282110 * (i + 1), 1.0);
    worst = std::max(worst, std::fabs(residual_quantile(x, z) -
                                      quantile_by_bisection(x, z, 1e-12)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("one forward step from zero stays within a quarter") {
  // From x = 0 one step gives u(1-u), which is at most 1/4.
  OracleConfig cfg;
  cfg.burn_in = 1;
  RngStream rng(21);
  for (int i = 0; i < 10000; ++i) {
    const double v = forward_chain_sample(rng, cfg);
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 0.25);
  }
}

TEST_CASE("forward chain stays in the unit interval") {
  RngStream rng(22);
  OracleConfig cfg;
  for (int i = 0; i < 10000; ++i) {
    const double v = forward_chain_sample(rng, cfg);
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0);
  }
}

TEST_CASE("forward chain mean matches the exact mean") {
  RngStream rng(23);
  OracleConfig cfg;
  double sum = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) sum += forward_chain_sample(rng, cfg);
  CHECK(std::fabs(sum / n - 1.0 / 3.0) <= 0.0008);
}

TEST_CASE("forward chain rejects bad configuration") {
  OracleConfig cfg;
  cfg.burn_in = -1;
  RngStream rng(24);
  CHECK_THROWS_AS(forward_chain_sample(rng, cfg), std::invalid_argument);
  cfg.burn_in = 10;
  cfg.start_state = 1.5;
  CHECK_THROWS_AS(forward_chain_sample(rng, cfg), std::domain_error);
}

TEST_CASE("exact moments") {
  const SampleMoments m = exact_moments();
  CHECK(m.mean == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m.second_moment == doctest::Approx(2.0 / 15.0).epsilon(1e-15));
  CHECK(m.variance == doctest::Approx(1.0 / 45.0).epsilon(1e-15));
  // The three are linked: var = E[X^2] - mean^2.
  CHECK(m.variance ==
        doctest::Approx(m.second_moment - m.mean * m.mean).epsilon(1e-14));
}

}  // TEST_SUITE
