#pragma once

// Independent cross-checks for the sampler. Nothing here shares code with
// the closed-form quantile path: the bisection inverse sees only the
// residual CDF, and the forward chain uses only the recursion
// x <- u x + u (1 - u) itself. Agreement between these and the production
// sampler is evidence, not tautology.

#include <cstdint>

#include "perpsim/rng.hpp"
#include "perpsim/stats.hpp"

namespace perpsim {

struct OracleConfig {
  double bisection_tol = 1e-12;
  int burn_in = 100;
  double start_state = 0.0;
};

// Inverts the residual CDF G_x by bisection on [0, b_x]. Runs until the
// bracket is narrower than tol. Throws std::domain_error for x outside
// [0,1] or z outside [0,1], std::invalid_argument for tol <= 0, and
// std::runtime_error if 200 halvings fail to reach tol (which a monotone
// CDF cannot cause for any tol >= 1e-15 on a unit-scale bracket).
double quantile_by_bisection(double x, double z, double tol = 1e-12);

// Approximate stationary draw by running the recursion forward from
// start_state for burn_in steps. Not exact (the bias decays geometrically
// in burn_in) but entirely independent of the coupling machinery, so it
// anchors the distributional tests. Throws std::invalid_argument for a
// negative burn_in, std::domain_error for start_state outside [0,1].
double forward_chain_sample(RngStream& rng, const OracleConfig& cfg = {});

// Stationary moments from the fixed-point equation: repeatedly expanding
// E[Y^k] for Y =_d UY + U(1-U) gives E[Y] = 1/3, E[Y^2] = 2/15, and
// variance 1/45.
SampleMoments exact_moments();

}  // namespace perpsim
