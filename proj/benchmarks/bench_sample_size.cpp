#include <benchmark/benchmark.h>

#include <vector>

#include "scenopt/sample_size.hpp"

namespace {

void BM_BinomialTail(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scenopt::binomial_tail(22618, n, 3.57e-3));
}
BENCHMARK(BM_BinomialTail)->Arg(2)->Arg(55)->Arg(500);

void BM_SampleSize(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scenopt::sample_size(3.57e-3, 0.002, n));
}
BENCHMARK(BM_SampleSize)->Arg(2)->Arg(55)->Arg(500);

void BM_SampleSizeUnion(benchmark::State& state) {
  std::vector<double> eps(static_cast<std::size_t>(state.range(0)));
  for (std::size_t k = 0; k < eps.size(); ++k) eps[k] = 0.01 * static_cast<double>(1 + k % 7);
  for (auto _ : state) benchmark::DoNotOptimize(scenopt::sample_size_union(eps, 0.01, 10));
}
BENCHMARK(BM_SampleSizeUnion)->Arg(4)->Arg(64)->Arg(1024);

}  // namespace
