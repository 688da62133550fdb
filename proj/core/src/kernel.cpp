#include "perpsim/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace perpsim {

namespace {

void check_unit(double v, const char* fn, const char* arg) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(fn) + ": " + arg + " = " +
                            std::to_string(v) + " outside [0,1]");
}

// Radicands vanish at exact breakpoints; rounding may push them a hair
// negative. Anything below -1e-12 means a real domain violation.
double sqrt_clamped(double v, const char* fn) {
  if (v < 0.0) {
    if (v < -1e-12)
      throw std::domain_error(std::string(fn) + ": negative radicand " +
                              std::to_string(v));
    v = 0.0;
  }
  return std::sqrt(v);
}

}  // namespace

double upper_endpoint(double x) {
  check_unit(x, "upper_endpoint", "x");
  const double h = 0.5 * (1.0 + x);
  return h * h;
}

double transition_density(double x, double t) {
  check_unit(x, "transition_density", "x");
  check_unit(t, "transition_density", "t");
  double coef;
  if (t < x)
    coef = 1.0;
  else if (t < upper_endpoint(x))
    coef = 2.0;
  else
    return 0.0;
  // (1+x)^2 - 4t > 0 whenever t < b_x, so the root below is nonzero.
  return coef / sqrt_clamped((1.0 + x) * (1.0 + x) - 4.0 * t,
                             "transition_density");
}

double transition_cdf(double x, double y) {
  check_unit(x, "transition_cdf", "x");
  check_unit(y, "transition_cdf", "y");
  if (y >= upper_endpoint(x)) return 1.0;
  const double root =
      sqrt_clamped((1.0 + x) * (1.0 + x) - 4.0 * y, "transition_cdf");
  const double f = (y < x) ? 0.5 * (1.0 + x - root) : 1.0 - root;
  return std::clamp(f, 0.0, 1.0);
}

double dominating_density(double t) {
  check_unit(t, "dominating_density", "t");
  return t < 0.25 ? 0.5 : 0.0;
}

double residual_cdf(double x, double y) {
  check_unit(x, "residual_cdf", "x");
  check_unit(y, "residual_cdf", "y");
  const double g =
      8.0 * (transition_cdf(x, y) - 0.5 * std::min(y, 0.25)) / 7.0;
  return std::clamp(g, 0.0, 1.0);
}

Breakpoints quantile_breakpoints(double x) {
  check_unit(x, "quantile_breakpoints", "x");
  const double root = std::sqrt(x * (x + 2.0));
  if (x <= 0.25)
    return {Breakpoints::Regime::Low, 4.0 * x / 7.0, 1.0 - 8.0 * root / 7.0};
  return {Breakpoints::Regime::High, (3.0 + 4.0 * x - 4.0 * root) / 7.0,
          (8.0 * x - 1.0) / 7.0};
}

namespace {

/// Shared first piece: y in [0, min(x,1/4)], both regimes.
double quantile_below_state(double x, double z) {
  const double c = 1.0 - x;
  return -1.75 * z + std::sqrt(7.0 * z + c * c) + x - 1.0;
}

// Low regime, y in (x, 1/4].
double quantile_low_mid(double x, double z) {
  return -1.75 * z + 2.0 * std::sqrt(7.0 * z + 9.0 + x * (x + 2.0)) - 6.0;
}

// High regime, y in (1/4, x].
double quantile_high_mid(double x, double z) {
  return (7.0 + 8.0 * x - 7.0 * z) * (1.0 + 7.0 * z) / 64.0;
}

// Topmost piece, y in (max(x,1/4), b_x], both regimes.
double quantile_top(double x, double z) {
  return (15.0 + 8.0 * x - 7.0 * z) * (1.0 + 8.0 * x + 7.0 * z) / 256.0;
}

}  // namespace

double residual_quantile(double x, double z) {
  check_unit(x, "residual_quantile", "x");
  check_unit(z, "residual_quantile", "z");
  const Breakpoints bp = quantile_breakpoints(x);
  double y;
  if (z <= bp.cut1)
    y = quantile_below_state(x, z);
  else if (z <= bp.cut2)
    y = (bp.regime == Breakpoints::Regime::Low) ? quantile_low_mid(x, z)
                                                : quantile_high_mid(x, z);
  else
    y = quantile_top(x, z);
  return std::clamp(y, 0.0, upper_endpoint(x));
}

}  // namespace perpsim
