#include "scenopt/example1.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "detail/parallel.hpp"
#include "scenopt/lp.hpp"
#include "scenopt/random.hpp"
#include "scenopt/scenario.hpp"

namespace scenopt {

namespace example1 {

double analytic_rcp(double gamma) {
  if (!(gamma >= 0.0)) throw std::domain_error("relaxation level must be nonnegative");
  return std::max(-std::numbers::sqrt2 * (gamma + 1.0), -2.0);
}

double analytic_ccp(double eps) {
  if (!(eps >= 0.0 && eps < 0.5))
    throw std::domain_error("closed form needs eps in [0, 1/2): cos(pi eps) must be positive");
  return std::max(-std::numbers::sqrt2 / std::cos(std::numbers::pi * eps), -2.0);
}

double ccp_reference(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::domain_error("eps must lie in [0, 1]");
  return eps < 0.5 ? analytic_ccp(eps) : -2.0;
}

double beta_star(double eps, std::uint64_t samples) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::domain_error("eps must lie in [0, 1]");
  const double n = static_cast<double>(samples);
  if (samples == 0) return 1.0;
  return std::pow(1.0 - eps, n) + n * eps * std::pow(1.0 - eps, n - 1.0);
}

Ulb ulb() { return build_ulb(std::numbers::sqrt2, 1.0 / std::numbers::pi, 1.0); }

}  // namespace example1

double empirical_interval(std::span<const double> gaps, double beta) {
  if (beta >= 1.0 || gaps.empty()) return 0.0;
  if (beta < 0.0) throw std::invalid_argument("beta must be nonnegative");
  const double m = static_cast<double>(gaps.size());
  const auto needed = static_cast<std::size_t>(std::ceil((1.0 - beta) * m - 1e-9));
  if (needed == 0) return 0.0;
  std::vector<double> sorted;
  sorted.reserve(gaps.size());
  for (const double g : gaps) {
    if (g < -1e-9) throw std::invalid_argument("gaps must be nonnegative");
    sorted.push_back(std::max(0.0, g));
  }
  const auto kth = sorted.begin() + static_cast<std::ptrdiff_t>(needed - 1);
  std::nth_element(sorted.begin(), kth, sorted.end());
  return *kth;
}

std::vector<double> parse_grid(const std::string& text) {
  std::istringstream in(text);
  double lo = 0.0;
  double hi = 0.0;
  long count = 0;
  char c1 = 0;
  char c2 = 0;
  if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1 || hi < lo)
    throw std::invalid_argument("grid must read lo:hi:count with lo <= hi and count >= 1");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] =
        count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return grid;
}

Example1Run run_example1(const Example1Config& config) {
  if (config.experiments == 0) throw std::invalid_argument("need at least one experiment");
  if (config.samples == 0) throw std::invalid_argument("need at least one scenario");
  if (config.designated >= config.experiments) throw std::invalid_argument("designated run out of range");
  for (const double e : config.eps_grid) {
    if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("eps grid must lie in (0, 1)");
  }

  const UncertainProgram program = example1::program();
  const Ulb h = example1::ulb();
  const double origin[] = {0.0, 0.0};
  Example1Run run;
  run.lsp = slater_constant(program, origin).lsp;
  run.range = value_range(program.cost, program.domain).width();

  const auto m = static_cast<std::size_t>(config.experiments);
  run.scenario_values.resize(m);
  run.dual_norms.resize(m);
  detail::parallel_for(m, [&](std::size_t k) {
    const ScenarioSet s = sample_scenarios(program.sampler, config.samples, derive_seed(config.seed, k));
    const ScpSolution sol = solve_scp(program, s);
    if (!sol.optimal()) {
      std::ostringstream msg;
      msg << "experiment " << k << ": scenario program " << to_string(sol.status);
      throw std::runtime_error(msg.str());
    }
    run.scenario_values[k] = sol.value;
    run.dual_norms[k] = sol.dual_l1;
  });

  const double robust = example1::analytic_rcp(0.0);
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> rcp_gaps(m);
  std::vector<double> ccp_gaps(m);
  for (std::size_t k = 0; k < m; ++k) rcp_gaps[k] = robust - run.scenario_values[k];

  run.rows.reserve(config.eps_grid.size());
  for (const double eps : config.eps_grid) {
    ExperimentRow row;
    row.eps = eps;
    row.beta_star = example1::beta_star(eps, config.samples);
    row.interval = apriori_interval(run.lsp, h, eps, run.range).width;
    row.empirical_rcp = empirical_interval(rcp_gaps, row.beta_star);

    // J*_CCP - J*_N(k) must lie in [-w, 0]; an experiment with J*_N(k) below
    // the chance-constrained optimum cannot be covered by any w.
    const double chance = example1::ccp_reference(eps);
    for (std::size_t k = 0; k < m; ++k) {
      const double gap = run.scenario_values[k] - chance;
      ccp_gaps[k] = gap < -1e-9 ? inf : std::max(0.0, gap);
    }
    row.empirical_ccp = empirical_interval(ccp_gaps, row.beta_star);
    row.aposteriori = aposteriori_interval(run.dual_norms[config.designated], h, eps, run.range).width;

    std::size_t rcp_hits = 0;
    std::size_t ccp_hits = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (rcp_gaps[k] >= -1e-9 && rcp_gaps[k] <= row.interval + 1e-9) ++rcp_hits;
      const double width = aposteriori_interval(run.dual_norms[k], h, eps, run.range).width;
      if (ccp_gaps[k] <= width + 1e-9) ++ccp_hits;
    }
    row.coverage_rcp = static_cast<double>(rcp_hits) / static_cast<double>(m);
    row.coverage_ccp = static_cast<double>(ccp_hits) / static_cast<double>(m);
    run.rows.push_back(row);
  }
  return run;
}

void write_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << kExample1CsvHeader << '\n';
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", r.eps,
                  r.beta_star, r.interval, r.empirical_rcp, r.empirical_ccp, r.aposteriori,
                  r.coverage_rcp, r.coverage_ccp);
    out << buf;
  }
}

CounterexampleReport run_counterexample(std::uint64_t samples, std::uint64_t runs, std::uint64_t seed) {
  if (samples == 0 || runs == 0) throw std::invalid_argument("need positive scenario and run counts");
  const UncertainProgram program = counterexample::program();
  CounterexampleReport report;
  report.samples = samples;
  report.runs = runs;
  for (std::uint64_t r = 0; r < runs; ++r) {
    const ScenarioSet s = sample_scenarios(program.sampler, samples, derive_seed(seed, r));
    const ScpSolution sol = solve_scp(program, s);
    if (!sol.optimal()) throw std::runtime_error("counterexample scenario program not optimal");
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& d : s.points) smallest = std::min(smallest, d.at(0));
    const double err = std::abs(sol.x[0] - smallest);
    report.max_error = std::max(report.max_error, err);
    if (err > 1e-9) ++report.mismatches;
    if (program.constraint.sup(sol.x) <= 0.0) ++report.robust_feasible;
  }
  return report;
}

}  // namespace scenopt
