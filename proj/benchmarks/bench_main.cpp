#include <benchmark/benchmark.h>

#include <vector>

#include "perpsim/kernel.hpp"
#include "perpsim/oracle.hpp"
#include "perpsim/rng.hpp"
#include "perpsim/sampler.hpp"
#include "perpsim/stats.hpp"

namespace {

void BM_SampleOne(benchmark::State& state) {
  perpsim::RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(perpsim::sample_one(rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleOne);

void BM_ResidualQuantile(benchmark::State& state) {
  perpsim::RngStream rng(2);
  for (auto _ : state) {
    const double x = rng.next();
    const double z = rng.next();
    benchmark::DoNotOptimize(perpsim::residual_quantile(x, z));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ResidualQuantile);

void BM_ResidualCdf(benchmark::State& state) {
  perpsim::RngStream rng(3);
  for (auto _ : state) {
    const double x = rng.next();
    const double y = rng.next() * perpsim::upper_endpoint(x);
    benchmark::DoNotOptimize(perpsim::residual_cdf(x, y));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ResidualCdf);

void BM_ForwardChainSample(benchmark::State& state) {
  perpsim::RngStream rng(4);
  perpsim::OracleConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(perpsim::forward_chain_sample(rng, cfg));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ForwardChainSample);

void BM_BuildHistogram(benchmark::State& state) {
  perpsim::RngStream rng(5);
  const std::vector<double> xs =
      perpsim::sample_many(rng, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        perpsim::build_histogram(xs, perpsim::HistogramSpec{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildHistogram)->Arg(100000)->Arg(1000000);

void BM_KsStatistic(benchmark::State& state) {
  perpsim::RngStream rng(6);
  const std::vector<double> a =
      perpsim::sample_many(rng, static_cast<std::uint64_t>(state.range(0)));
  const std::vector<double> b =
      perpsim::sample_many(rng, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(perpsim::ks_statistic(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KsStatistic)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
