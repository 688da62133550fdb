#include "perpsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace perpsim {

Histogram build_histogram(const std::vector<double>& xs, HistogramSpec spec) {
  if (xs.empty()) throw std::invalid_argument("build_histogram: empty sample");
  if (spec.bins < 1) throw std::invalid_argument("build_histogram: bins < 1");
  if (!(spec.lo < spec.hi))
    throw std::invalid_argument("build_histogram: lo >= hi");

  const std::size_t bins = static_cast<std::size_t>(spec.bins);
  const double width = (spec.hi - spec.lo) / spec.bins;
  std::vector<std::uint64_t> counts(bins, 0);
  std::uint64_t outside = 0;

  for (double x : xs) {
    if (!(x >= spec.lo) || x >= spec.hi) {
      ++outside;
      continue;
    }
    std::size_t idx = static_cast<std::size_t>((x - spec.lo) / width);
    if (idx >= bins) idx = bins - 1;  // rounding can push x just past the edge
    ++counts[idx];
  }

  Histogram hist;
  hist.spec = spec;
  hist.count_total = xs.size();
  hist.outside_count = outside;
  hist.densities.resize(bins);
  const double norm = static_cast<double>(xs.size()) * width;
  for (std::size_t i = 0; i < bins; ++i)
    hist.densities[i] = static_cast<double>(counts[i]) / norm;
  return hist;
}

void write_histogram_csv(std::ostream& out, const Histogram& hist) {
  const double width = (hist.spec.hi - hist.spec.lo) / hist.spec.bins;
  out << "bin_lo,bin_hi,density\n";
  char row[128];
  for (std::size_t i = 0; i < hist.densities.size(); ++i) {
    const double lo = hist.spec.lo + static_cast<double>(i) * width;
    const double hi = (i + 1 == hist.densities.size())
                          ? hist.spec.hi
                          : hist.spec.lo + static_cast<double>(i + 1) * width;
    std::snprintf(row, sizeof(row), "%.12e,%.12e,%.12e\n", lo, hi,
                  hist.densities[i]);
    out << row;
  }
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  double sup = 0.0;
  // Advance past ties together so both CDFs are evaluated after every jump.
  while (ia < a.size() && ib < b.size()) {
    const double v = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] == v) ++ia;
    while (ib < b.size() && b[ib] == v) ++ib;
    sup = std::max(sup, std::fabs(static_cast<double>(ia) / na -
                                  static_cast<double>(ib) / nb));
  }
  return sup;
}

SampleMoments empirical_moments(const std::vector<double>& xs) {
  if (xs.size() < 2)
    throw std::invalid_argument("empirical_moments: need at least 2 values");
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double x : xs) {
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  double ss_centered = 0.0;
  for (double x : xs) {
    const double d = x - mean;
    ss_centered += d * d;
  }
  return SampleMoments{mean, sum_sq / n, ss_centered / (n - 1.0)};
}

}  // namespace perpsim
