#include "perpsim/sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "perpsim/kernel.hpp"

namespace perpsim {

namespace {

// ln(7/8), the log of the geometric failure probability.
const double kLogSeven8ths = std::log(7.0 / 8.0);

}  // namespace

std::uint64_t geometric_from_uniform(double u) {
  if (!(u >= 0.0) || u >= 1.0)
    throw std::domain_error("geometric_from_uniform: u outside [0,1)");
  if (u == 0.0) u = std::numeric_limits<double>::denorm_min();
  // P(N >= k) = (7/8)^k, so N = floor(ln u / ln(7/8)) inverts the CDF.
  return static_cast<std::uint64_t>(std::floor(std::log(u) / kLogSeven8ths));
}

std::uint64_t draw_geometric(RngStream& rng) {
  return geometric_from_uniform(rng.next());
}

double chain_step(double x, bool couple, double u) {
  if (!(x >= 0.0) || x > 1.0)
    throw std::domain_error("chain_step: x outside [0,1]");
  if (!(u >= 0.0) || u > 1.0)
    throw std::domain_error("chain_step: u outside [0,1]");
  if (couple) return 0.25 * u;
  return residual_quantile(x, u);
}

double sample_one(RngStream& rng) {
  const std::uint64_t steps = draw_geometric(rng);
  double x = chain_step(0.0, true, rng.next());
  for (std::uint64_t k = 0; k < steps; ++k) x = chain_step(x, false, rng.next());
  return x;
}

std::vector<double> sample_many(RngStream& rng, std::uint64_t n) {
  if (n > 1000000000ULL)
    throw std::length_error("sample_many: n exceeds 1e9");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(sample_one(rng));
  return out;
}

SampleTrace sample_traced(RngStream& rng) {
  SampleTrace trace;
  trace.steps = draw_geometric(rng);
  trace.path.reserve(static_cast<std::size_t>(trace.steps) + 1);
  double x = chain_step(0.0, true, rng.next());
  trace.coupled_value = x;
  trace.path.push_back(x);
  for (std::uint64_t k = 0; k < trace.steps; ++k) {
    x = chain_step(x, false, rng.next());
    trace.path.push_back(x);
  }
  return trace;
}

}  // namespace perpsim
