#include <benchmark/benchmark.h>

#include <random>

#include "scenopt/builtin.hpp"
#include "scenopt/example1.hpp"
#include "scenopt/scenario.hpp"

namespace {

using namespace scenopt;

LinearProgram random_lp(std::size_t dim, std::size_t rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LinearProgram lp;
  for (std::size_t j = 0; j < dim; ++j) lp.cost.push_back(u(rng));
  lp.box = std::vector<Interval>(dim, Interval{-1.0, 1.0});
  for (std::size_t i = 0; i < rows; ++i) {
    HalfSpace h;
    for (std::size_t j = 0; j < dim; ++j) h.a.push_back(u(rng));
    h.b = 0.5 + 0.5 * (u(rng) + 1.0);
    lp.add_row(std::move(h), RowTag{RowKind::Scenario, i});
  }
  return lp;
}

void BM_SolveLp(benchmark::State& state) {
  const LinearProgram lp =
      random_lp(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_SolveLp)->Args({2, 60})->Args({10, 1000})->Args({55, 5000})->Unit(benchmark::kMicrosecond);

void BM_SolveScpExample1(benchmark::State& state) {
  const UncertainProgram p = example1::program();
  const ScenarioSet s = sample_scenarios(p.sampler, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_scp(p, s));
}
BENCHMARK(BM_SolveScpExample1)->Arg(60)->Arg(1000)->Arg(25000)->Unit(benchmark::kMicrosecond);

void BM_TieBreak(benchmark::State& state) {
  const UncertainProgram p = UncertainProgram::make({-1.0, 0.0}, Polytope::from_box({{0, 1}, {0, 1}}),
                                                    example1::constraint(), example1::sampler());
  const ScenarioSet s = sample_scenarios(p.sampler, static_cast<std::size_t>(state.range(0)), 3);
  const double value = solve_scp(p, s).value;
  for (auto _ : state) benchmark::DoNotOptimize(tie_break(p, s, value));
}
BENCHMARK(BM_TieBreak)->Arg(60)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_Example1Study(benchmark::State& state) {
  Example1Config config;
  config.experiments = static_cast<std::uint64_t>(state.range(0));
  config.eps_grid = parse_grid("0.02:0.5:25");
  for (auto _ : state) benchmark::DoNotOptimize(run_example1(config));
}
BENCHMARK(BM_Example1Study)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
