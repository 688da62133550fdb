#pragma once

// Exact sampling from the stationary law of the Markov chain
//
//   X_{k+1} = U X_k + U (1 - U),   U ~ Uniform(0,1),
//
// by coupling from the past. The transition density sits above the
// state-independent function r(t) = (1/2) 1_{[0,1/4)}(t), whose mass is 1/8.
// A backward coupling time N ~ Geometric(1/8) on {0,1,2,...} says how many
// residual steps separate the present from the most recent time every state
// coalesced; at that time the chain regenerates from density 2 r, i.e.
// Uniform(0,1/4). Running N residual-quantile updates forward from the
// regeneration value yields one draw whose law is exactly stationary.
//
// Cost per draw: 1 + (N + 1) uniforms, so nine in expectation.

#include <cstdint>
#include <vector>

#include "perpsim/rng.hpp"

namespace perpsim {

// Backward coupling time from a single uniform: the number of failures
// before the first success in Bernoulli(1/8) trials, via CDF inversion.
// u must lie in [0,1); u = 0 is treated as the smallest positive double
// so the logarithm stays finite.
std::uint64_t geometric_from_uniform(double u);

// Draws one uniform from the stream and inverts it. Mean is 7.
std::uint64_t draw_geometric(RngStream& rng);

// One forward step of the coupled chain. With couple = true the step
// regenerates: the state becomes u/4 regardless of x. With couple = false
// it advances by the residual quantile, x <- G_x^{-1}(u). Throws
// std::domain_error if x or u is outside [0,1].
double chain_step(double x, bool couple, double u);

// One exact stationary draw.
double sample_one(RngStream& rng);

// n exact stationary draws from one stream, in stream order. Throws
// std::length_error if n exceeds 1e9.
std::vector<double> sample_many(RngStream& rng, std::uint64_t n);

// One draw with its construction exposed, for diagnostics and tests.
// steps is the geometric variate N, coupled_value the Uniform(0,1/4)
// regeneration state, and path holds the N + 1 states from the
// regeneration value through the returned draw (path.front() ==
// coupled_value, path.back() == the draw).
struct SampleTrace {
  std::uint64_t steps;
  double coupled_value;
  std::vector<double> path;
};

SampleTrace sample_traced(RngStream& rng);

}  // namespace perpsim
