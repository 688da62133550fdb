#pragma once

// Sample diagnostics: area-normalized histograms, the exact two-sample
// Kolmogorov-Smirnov statistic, and moment estimates. These are the
// measurement half of the validation layer; they know nothing about the
// sampler they are pointed at.

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace perpsim {

struct HistogramSpec {
  int bins = 200;
  double lo = 0.0;
  double hi = 1.0;
};

// densities[i] = count_i / (count_total * width), so the bin areas sum to
// the fraction of samples that landed inside [lo, hi). Samples at or above
// hi, or below lo, are tallied in outside_count and carry no area.
struct Histogram {
  HistogramSpec spec;
  std::vector<double> densities;
  std::uint64_t count_total = 0;
  std::uint64_t outside_count = 0;
};

// Bins are half-open [edge_i, edge_{i+1}) with equal widths. Throws
// std::invalid_argument if xs is empty, bins < 1, or lo >= hi.
Histogram build_histogram(const std::vector<double>& xs, HistogramSpec spec);

// Header line "bin_lo,bin_hi,density", then one row per bin, every field
// printed as %.12e. Output is byte-identical across runs and platforms
// for identical input.
void write_histogram_csv(std::ostream& out, const Histogram& hist);

// Exact sup-distance between the two empirical CDFs, computed by a merge
// scan of the sorted samples (no grid, no approximation). Throws
// std::invalid_argument if either sample is empty.
double ks_statistic(std::vector<double> a, std::vector<double> b);

struct SampleMoments {
  double mean;
  double second_moment;  // E[X^2] estimate, uncentered
  double variance;       // unbiased, divisor n - 1
};

// Two-pass moments. Throws std::invalid_argument if xs has fewer than
// two elements.
SampleMoments empirical_moments(const std::vector<double>& xs);

}  // namespace perpsim
