#include "perpsim/oracle.hpp"

#include <stdexcept>

#include "perpsim/kernel.hpp"

namespace perpsim {

double quantile_by_bisection(double x, double z, double tol) {
  if (!(x >= 0.0) || x > 1.0)
    throw std::domain_error("quantile_by_bisection: x outside [0,1]");
  if (!(z >= 0.0) || z > 1.0)
    throw std::domain_error("quantile_by_bisection: z outside [0,1]");
  if (!(tol > 0.0))
    throw std::invalid_argument("quantile_by_bisection: tol must be positive");

  double lo = 0.0;
  double hi = upper_endpoint(x);
  // G_x is continuous and nondecreasing with G_x(0) = 0, G_x(b_x) = 1, so
  // the bracket [lo, hi] always contains a point where G_x = z.
  int iterations = 0;
  while (hi - lo > tol) {
    if (++iterations > 200)
      throw std::runtime_error(
          "quantile_by_bisection: no convergence after 200 iterations");
    const double mid = 0.5 * (lo + hi);
    if (residual_cdf(x, mid) < z)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double forward_chain_sample(RngStream& rng, const OracleConfig& cfg) {
  if (cfg.burn_in < 0)
    throw std::invalid_argument("forward_chain_sample: negative burn_in");
  if (!(cfg.start_state >= 0.0) || cfg.start_state > 1.0)
    throw std::domain_error("forward_chain_sample: start_state outside [0,1]");
  double x = cfg.start_state;
  for (int k = 0; k < cfg.burn_in; ++k) {
    const double u = rng.next();
    x = u * x + u * (1.0 - u);
  }
  return x;
}

SampleMoments exact_moments() {
  return SampleMoments{1.0 / 3.0, 2.0 / 15.0, 1.0 / 45.0};
}

}  // namespace perpsim
