#pragma once

// Closed-form transition kernel of the Markov chain x -> U*x + U*(1-U) on
// [0,1], split for multigamma coupling as phi_x = r + g_x where the
// dominating part r(t) = (1/2)*1_{[0,1/4)}(t) does not depend on x.
//
// Everything here is an elementary function of (x, t | y | z); all
// functions are pure and thread-safe.

#include <cstdint>

namespace perpsim {

// Mass of the dominating density r; also the per-step coupling probability.
inline constexpr double kCouplingMass = 0.125;

// Right endpoint b_x = ((1+x)/2)^2 of the support of the transition density
// from state x. Increases from 1/4 at x=0 to 1 at x=1.
double upper_endpoint(double x);

// Transition density phi_x(t) = ((1+x)^2 - 4t)^(-1/2) * (1 on [0,x),
// 2 on [x,b_x), 0 elsewhere). Unbounded as t -> b_x from the left;
// phi_x(b_x) = 0 under the half-open convention.
double transition_density(double x, double t);

// Distribution function F_x of U*x + U*(1-U):
//   (1+x-sqrt((1+x)^2-4y))/2   for y in [0,x)
//   1-sqrt((1+x)^2-4y)         for y in [x,b_x)
//   1                          for y >= b_x
double transition_cdf(double x, double y);

// Dominating density r(t) = 1/2 on [0,1/4), 0 elsewhere. Total mass 1/8.
double dominating_density(double t);

// CDF of the normalized residual g_x/(7/8), g_x = phi_x - r:
//   G_x(y) = (8/7) * (F_x(y) - min(y,1/4)/2).
// Maps [0,b_x] onto [0,1], strictly increasing there.
double residual_cdf(double x, double y);

// Quantile cut points of the piecewise inverse of G_x. In the Low regime
// (x <= 1/4) the pieces split at q_x = G_x(x) and r_x = G_x(1/4); in the
// High regime (x > 1/4) at s_x = G_x(1/4) and t_x = G_x(x). All four
// coincide at 1/7 when x = 1/4.
struct Breakpoints {
  enum class Regime { Low, High };
  Regime regime;
  double cut1;  // q_x = 4x/7             | s_x = (3+4x-4*sqrt(x(x+2)))/7
  double cut2;  // r_x = 1-8*sqrt(x(x+2))/7 | t_x = (8x-1)/7
};
Breakpoints quantile_breakpoints(double x);

// Inverse of residual_cdf: the explicit six-piece quantile function
// G_x^{-1}(z), continuous and strictly increasing from 0 to b_x. The result
// is clamped into [0,b_x] so callers keep the chain-state invariant under
// floating-point overshoot.
double residual_quantile(double x, double z);

}  // namespace perpsim
