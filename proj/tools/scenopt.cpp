#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "json_output.hpp"
#include "scenopt/bounds.hpp"
#include "scenopt/config.hpp"
#include "scenopt/example1.hpp"
#include "scenopt/sample_size.hpp"
#include "scenopt/scenario.hpp"
#include "scenopt/union.hpp"

namespace {

using namespace scenopt;
using nlohmann::json;

std::vector<double> parse_numbers(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',' || ch == ';') ch = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<double> out;
  double v = 0.0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("cannot parse number list \"" + text + "\"");
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

struct SampleSizeArgs {
  double eps = 0.0;
  double beta = 0.0;
  std::uint64_t n = 0;
  std::uint64_t m = 1;
};

int run_sample_size(const SampleSizeArgs& a) {
  const std::vector<double> eps(a.m, a.eps);
  const std::uint64_t n_required = sample_size_union(eps, a.beta, a.n);
  const double tail = static_cast<double>(a.m) * binomial_tail(n_required, a.n, a.eps);
  std::cout << n_required << '\n' << "tail " << std::setprecision(12) << tail << '\n';
  return 0;
}

struct SolveArgs {
  std::string config;
  std::size_t scenarios = 0;
  std::uint64_t seed = 0;
  double gamma = 0.0;
  bool tie_break = false;
};

int run_solve(const SolveArgs& a) {
  const UncertainProgram program = load_problem(a.config);
  const ScenarioSet s = sample_scenarios(program.sampler, a.scenarios, a.seed);
  const ScpSolution sol = solve_scp(program, s, a.gamma);
  json out = cli::to_json(sol);
  if (a.tie_break && sol.optimal()) {
    const TieBreakResult tb = tie_break(program, s, sol.value);
    out["x_tilde"] = tb.x;
    out["tie_break_gap"] = tb.gap;
  }
  print_json(out);
  return sol.optimal() ? 0 : 2;
}

struct BoundsArgs {
  std::string config;
  std::string ulb;
  std::string slater;
  double slater_sup = 0.0;
  bool has_slater_sup = false;
  double eps = 0.0;
  double beta = 0.0;
  std::size_t scenarios = 0;
  std::uint64_t seed = 0;
  bool posterior = false;
  bool ccp = false;
};

int run_bounds(const BoundsArgs& a) {
  const UncertainProgram program = load_problem(a.config);
  const std::vector<double> u = parse_numbers(a.ulb);
  if (u.size() != 3) throw std::invalid_argument("--ulb expects \"Ld,kappa,p\"");
  const Ulb h = build_ulb(u[0], u[1], u[2]);
  const double range = value_range(program.cost, program.domain).width();

  const ScenarioSet s = sample_scenarios(program.sampler, a.scenarios, a.seed);
  const ScpSolution sol = solve_scp(program, s);
  if (!sol.optimal()) {
    print_json(cli::to_json(sol));
    return 2;
  }

  ConfidenceReport report;
  if (a.posterior) {
    report = ccp_report(sol.value, aposteriori_interval(sol.dual_l1, h, a.eps, range), a.eps, a.beta,
                        s.size(), program.dimension(), ReportKind::CcpAPosteriori);
  } else {
    if (a.slater.empty()) throw std::invalid_argument("--slater is required without --posterior");
    const std::vector<double> x0 = parse_numbers(a.slater);
    const SlaterCertificate cert = a.has_slater_sup ? slater_constant(program, x0, a.slater_sup)
                                                    : slater_constant(program, x0);
    const IntervalBound bound = apriori_interval(cert.lsp, h, a.eps, range);
    report = a.ccp ? ccp_report(sol.value, bound, a.eps, a.beta, s.size(), program.dimension(),
                                ReportKind::CcpAPriori)
                   : rcp_report(sol.value, bound, a.eps, a.beta, s.size(), program.dimension());
  }
  print_json(cli::to_json(report));
  return 0;
}

struct UnionArgs {
  std::string config;
  std::size_t scenarios = 0;
  std::uint64_t seed = 0;
  double beta = 0.05;
};

int run_union(const UnionArgs& a) {
  const SubprogramFamily family = load_family(a.config);
  const ScenarioSet s = sample_scenarios(family.sampler(), a.scenarios, a.seed);
  const SpSolution sol = solve_sp(family, s);
  json out = cli::to_json(sol);
  out["reports"] = cli::to_json(union_report(sol, family, a.beta, s.size()));
  print_json(out);
  return sol.feasible() ? 0 : 2;
}

struct Example1Args {
  std::uint64_t scenarios = 60;
  std::uint64_t experiments = 2000;
  std::string grid = "0.01:0.5:50";
  std::uint64_t seed = 1;
  std::string out;
};

int run_example1_cmd(const Example1Args& a) {
  Example1Config config;
  config.samples = a.scenarios;
  config.experiments = a.experiments;
  config.eps_grid = parse_grid(a.grid);
  config.seed = a.seed;
  const Example1Run run = run_example1(config);
  if (a.out.empty()) {
    write_csv(std::cout, run.rows);
    return 0;
  }
  std::ofstream file(a.out);
  if (!file) throw std::runtime_error("cannot write " + a.out);
  write_csv(file, run.rows);
  std::cout << "wrote " << run.rows.size() << " rows to " << a.out << '\n';
  return 0;
}

struct CounterexampleArgs {
  std::uint64_t scenarios = 0;
  std::uint64_t runs = 1000;
  std::uint64_t seed = 1;
};

int run_counterexample_cmd(const CounterexampleArgs& a) {
  const CounterexampleReport r = run_counterexample(a.scenarios, a.runs, a.seed);
  print_json(json{{"n_scenarios", r.samples},
                  {"runs", r.runs},
                  {"mismatches", r.mismatches},
                  {"max_error", r.max_error},
                  {"robust_feasible", r.robust_feasible}});
  return r.mismatches == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scenario optimization with confidence intervals"};
  app.require_subcommand(1);

  SampleSizeArgs ss;
  auto* c_ss = app.add_subcommand("sample-size", "Smallest N with binomial tail <= beta");
  c_ss->add_option("--eps", ss.eps, "violation level")->required();
  c_ss->add_option("--beta", ss.beta, "confidence parameter")->required();
  c_ss->add_option("--n", ss.n, "number of decision variables")->required();
  c_ss->add_option("--m", ss.m, "number of subprograms sharing eps")->check(CLI::PositiveNumber);

  SolveArgs sv;
  auto* c_solve = app.add_subcommand("solve", "Solve the scenario program");
  c_solve->add_option("--config", sv.config, "problem file")->required()->check(CLI::ExistingFile);
  c_solve->add_option("--n-scenarios", sv.scenarios)->required()->check(CLI::PositiveNumber);
  c_solve->add_option("--seed", sv.seed)->required();
  c_solve->add_option("--gamma", sv.gamma, "constraint relaxation")->check(CLI::NonNegativeNumber);
  c_solve->add_flag("--tie-break", sv.tie_break, "also return the least-norm optimizer");

  BoundsArgs bd;
  auto* c_bounds = app.add_subcommand("bounds", "Confidence interval for the robust or chance-constrained value");
  c_bounds->add_option("--config", bd.config, "problem file")->required()->check(CLI::ExistingFile);
  c_bounds->add_option("--ulb", bd.ulb, "\"Ld,kappa,p\"")->required();
  c_bounds->add_option("--slater", bd.slater, "strictly feasible point, comma separated");
  c_bounds->add_option("--slater-sup", bd.slater_sup, "sup_d f(x0, d) if the constraint has no closed form");
  c_bounds->add_option("--eps", bd.eps)->required();
  c_bounds->add_option("--beta", bd.beta)->required();
  c_bounds->add_option("--n-scenarios", bd.scenarios)->required()->check(CLI::PositiveNumber);
  c_bounds->add_option("--seed", bd.seed)->required();
  c_bounds->add_flag("--posterior", bd.posterior, "chance-constrained interval from the scenario duals");
  c_bounds->add_flag("--ccp", bd.ccp, "a priori interval for the chance-constrained value");

  UnionArgs un;
  auto* c_union = app.add_subcommand("solve-union", "Solve a union of scenario programs");
  c_union->add_option("--config", un.config, "family file")->required()->check(CLI::ExistingFile);
  c_union->add_option("--n-scenarios", un.scenarios)->required()->check(CLI::PositiveNumber);
  c_union->add_option("--seed", un.seed)->required();
  c_union->add_option("--beta", un.beta, "confidence parameter for the reports")->capture_default_str();

  Example1Args ex;
  auto* c_ex = app.add_subcommand("example1", "Monte Carlo study of the two-dimensional example");
  c_ex->add_option("--n-scenarios", ex.scenarios)->capture_default_str()->check(CLI::PositiveNumber);
  c_ex->add_option("--experiments", ex.experiments)->capture_default_str()->check(CLI::PositiveNumber);
  c_ex->add_option("--eps-grid", ex.grid, "lo:hi:count")->capture_default_str();
  c_ex->add_option("--seed", ex.seed)->capture_default_str();
  c_ex->add_option("--out", ex.out, "CSV file (stdout if omitted)");

  CounterexampleArgs ce;
  auto* c_ce = app.add_subcommand("counterexample", "Scenario optimizer that is never robustly feasible");
  c_ce->add_option("--n-scenarios", ce.scenarios)->required()->check(CLI::PositiveNumber);
  c_ce->add_option("--runs", ce.runs)->capture_default_str()->check(CLI::PositiveNumber);
  c_ce->add_option("--seed", ce.seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_ss) return run_sample_size(ss);
    if (*c_solve) return run_solve(sv);
    if (*c_bounds) {
      bd.has_slater_sup = c_bounds->count("--slater-sup") > 0;
      return run_bounds(bd);
    }
    if (*c_union) return run_union(un);
    if (*c_ex) return run_example1_cmd(ex);
    if (*c_ce) return run_counterexample_cmd(ce);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
