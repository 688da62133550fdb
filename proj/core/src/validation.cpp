#include "perpsim/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "perpsim/kernel.hpp"
#include "perpsim/oracle.hpp"
#include "perpsim/sampler.hpp"
#include "perpsim/stats.hpp"

namespace perpsim {

namespace {

constexpr int kGridSteps = 512;        // kernel grids, step 1/512
constexpr std::uint64_t kPairs = 10000;  // round trips and bisection points
constexpr std::uint64_t kKsSize = 100000;

double grid_point(int i, int steps) {
  return static_cast<double>(i) / static_cast<double>(steps);
}

// Worst signed violation of phi_x(t) >= r(t) over the full grid.
double worst_decomposition_gap() {
  double worst = -1.0;
  for (int i = 0; i <= kGridSteps; ++i) {
    const double x = grid_point(i, kGridSteps);
    for (int j = 0; j <= kGridSteps; ++j) {
      const double t = grid_point(j, kGridSteps);
      worst = std::max(worst,
                       dominating_density(t) - transition_density(x, t));
    }
  }
  return worst;
}

// Worst shortfall below 1/2 of phi_x(t) for t in [0, 1/4 - 1e-9].
double worst_lower_bound_gap() {
  const double t_end = 0.25 - 1e-9;
  double worst = -1.0;
  for (int i = 0; i <= kGridSteps; ++i) {
    const double x = grid_point(i, kGridSteps);
    for (int j = 0; j <= kGridSteps; ++j) {
      double t = grid_point(j, kGridSteps);
      if (t > t_end) break;
      worst = std::max(worst, 0.5 - transition_density(x, t));
    }
    worst = std::max(worst, 0.5 - transition_density(x, t_end));
  }
  return worst;
}

// Central difference of F against phi, relative to 1 + phi. Stencil points
// stay clear of the density break at t = x and of the endpoint b_x.
double worst_cdf_density_gap() {
  const double h = 1e-6;
  const double margin = 1e-3;
  double worst = 0.0;
  for (int i = 0; i <= 64; ++i) {
    const double x = grid_point(i, 64);
    const double y_max = upper_endpoint(x) - margin;
    for (int j = 1; j < 200; ++j) {
      const double y = y_max * static_cast<double>(j) / 200.0;
      if (std::fabs(y - x) <= 1e-4) continue;
      const double slope =
          (transition_cdf(x, y + h) - transition_cdf(x, y - h)) / (2.0 * h);
      const double phi = transition_density(x, y);
      worst = std::max(worst, std::fabs(slope - phi) / (1.0 + phi));
    }
  }
  return worst;
}

double worst_round_trip_forward(RngStream& rng) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < kPairs; ++i) {
    const double x = rng.next();
    const double z = rng.next();
    const double y = residual_quantile(x, z);
    worst = std::max(worst, std::fabs(residual_cdf(x, y) - z));
  }
  return worst;
}

double worst_round_trip_backward(RngStream& rng) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < kPairs; ++i) {
    const double x = rng.next();
    const double y = rng.next() * upper_endpoint(x);
    const double z = residual_cdf(x, y);
    worst = std::max(worst, std::fabs(residual_quantile(x, z) - y));
  }
  return worst;
}

double worst_breakpoint_gap() {
  double worst = 0.0;
  for (int i = 0; i <= kGridSteps; ++i) {
    const double x = grid_point(i, kGridSteps);
    const Breakpoints bp = quantile_breakpoints(x);
    worst = std::max(
        worst, std::fabs(residual_cdf(x, std::min(x, 0.25)) - bp.cut1));
    worst = std::max(
        worst, std::fabs(residual_cdf(x, std::max(x, 0.25)) - bp.cut2));
  }
  return worst;
}

double worst_regime_jump() {
  double worst = 0.0;
  for (int j = 0; j <= kGridSteps; ++j) {
    const double z = grid_point(j, kGridSteps);
    worst = std::max(worst, std::fabs(residual_quantile(0.25 - 1e-9, z) -
                                      residual_quantile(0.25 + 1e-9, z)));
  }
  return worst;
}

// Most negative increment of the quantile over consecutive grid z values.
double worst_monotonicity_drop() {
  double worst = -1.0;
  for (int i = 0; i <= 64; ++i) {
    const double x = grid_point(i, 64);
    double prev = residual_quantile(x, 0.0);
    for (int j = 1; j <= kGridSteps; ++j) {
      const double cur = residual_quantile(x, grid_point(j, kGridSteps));
      worst = std::max(worst, prev - cur);
      prev = cur;
    }
  }
  return worst;
}

double worst_bisection_gap(RngStream& rng) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < kPairs; ++i) {
    const double x = rng.next();
    const double z = rng.next();
    worst = std::max(worst, std::fabs(residual_quantile(x, z) -
                                      quantile_by_bisection(x, z, 1e-12)));
  }
  return worst;
}

}  // namespace

ValidationReport run_validation_suite(std::uint64_t seed, std::uint64_t n) {
  if (n < 10000)
    throw std::invalid_argument("run_validation_suite: n must be >= 10000");

  ValidationReport report;
  report.seed = seed;
  report.n = n;
  auto add = [&report](const char* name, double measured, double tolerance) {
    report.checks.push_back(
        ValidationCheck{name, measured, tolerance, measured <= tolerance});
  };

  // Deterministic analytic-kernel grids.
  add("decomposition_positivity", worst_decomposition_gap(), 1e-12);
  add("density_lower_bound", worst_lower_bound_gap(), 1e-12);
  add("cdf_density_consistency", worst_cdf_density_gap(), 1e-4);
  add("breakpoint_coherence", worst_breakpoint_gap(), 1e-12);
  add("regime_continuity", worst_regime_jump(), 1e-6);
  add("quantile_monotonicity", worst_monotonicity_drop(), 1e-12);
  add("dominating_mass",
      std::fabs(0.25 * dominating_density(0.125) - kCouplingMass), 0.0);

  // Randomized kernel checks, each on its own derived stream.
  RngStream trips_a = RngStream::for_worker(seed, 1);
  add("round_trip_forward", worst_round_trip_forward(trips_a), 1e-9);
  RngStream trips_b = RngStream::for_worker(seed, 2);
  add("round_trip_backward", worst_round_trip_backward(trips_b), 1e-9);
  RngStream bisect = RngStream::for_worker(seed, 3);
  add("bisection_agreement", worst_bisection_gap(bisect), 1e-9);

  // Main sampler pass: n exact draws with their coupling times.
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  std::uint64_t range_violations = 0;
  std::uint64_t coupled_immediately = 0;
  double steps_sum = 0.0;
  {
    RngStream rng = RngStream::for_worker(seed, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      const SampleTrace trace = sample_traced(rng);
      const double v = trace.path.back();
      values.push_back(v);
      steps_sum += static_cast<double>(trace.steps);
      if (trace.steps == 0) {
        ++coupled_immediately;
        if (!(v >= 0.0 && v < 0.25)) ++range_violations;
      } else if (!(v >= 0.0 && v < 1.0)) {
        ++range_violations;
      }
    }
  }
  const double dn = static_cast<double>(n);
  add("sample_range", static_cast<double>(range_violations), 0.0);
  add("coupling_frequency",
      std::fabs(static_cast<double>(coupled_immediately) / dn - 0.125),
      0.002);
  add("uniforms_per_sample", std::fabs(steps_sum / dn + 1.0 - 8.0), 0.05);

  // Replay of the first block from a fresh stream must be bit-identical.
  {
    const std::uint64_t replay = std::min<std::uint64_t>(n, 1000);
    RngStream rng = RngStream::for_worker(seed, 0);
    std::uint64_t mismatches = 0;
    for (std::uint64_t i = 0; i < replay; ++i)
      if (sample_one(rng) != values[static_cast<std::size_t>(i)])
        ++mismatches;
    add("determinism", static_cast<double>(mismatches), 0.0);
  }

  add("moment_mean",
      std::fabs(empirical_moments(values).mean - 1.0 / 3.0), 0.0008);
  add("moment_variance",
      std::fabs(empirical_moments(values).variance - 1.0 / 45.0), 0.001);

  // Distributional agreement with the independent forward-chain sampler.
  {
    RngStream perfect = RngStream::for_worker(seed, 4);
    std::vector<double> a = sample_many(perfect, kKsSize);
    RngStream forward = RngStream::for_worker(seed, 5);
    std::vector<double> b;
    b.reserve(kKsSize);
    OracleConfig cfg;
    for (std::uint64_t i = 0; i < kKsSize; ++i)
      b.push_back(forward_chain_sample(forward, cfg));
    add("ks_perfect_vs_forward", ks_statistic(std::move(a), std::move(b)),
        0.01);
  }

  return report;
}

void write_report_text(std::ostream& out, const ValidationReport& report) {
  char line[160];
  std::snprintf(line, sizeof(line), "validation suite  seed=%llu  n=%llu\n",
                static_cast<unsigned long long>(report.seed),
                static_cast<unsigned long long>(report.n));
  out << line;
  int passed = 0;
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof(line),
                  "  %-26s measured=% .6e  tolerance=%.1e  %s\n",
                  c.name.c_str(), c.measured, c.tolerance,
                  c.pass ? "PASS" : "FAIL");
    out << line;
    if (c.pass) ++passed;
  }
  std::snprintf(line, sizeof(line), "overall: %s (%d/%d checks)\n",
                report.all_passed() ? "PASS" : "FAIL", passed,
                static_cast<int>(report.checks.size()));
  out << line;
}

void write_report_csv(std::ostream& out, const ValidationReport& report) {
  out << "check_name,measured,tolerance,pass\n";
  char line[160];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof(line), "%s,%.12e,%.12e,%d\n", c.name.c_str(),
                  c.measured, c.tolerance, c.pass ? 1 : 0);
    out << line;
  }
}

}  // namespace perpsim
