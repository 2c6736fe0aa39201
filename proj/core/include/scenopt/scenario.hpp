#pragma once

#include <cstddef>
#include <cstdint>

#include "scenopt/lp.hpp"
#include "scenopt/model.hpp"

namespace scenopt {

/// Solution of the scenario program with scenario rows relaxed by gamma.
struct ScpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vector x;
  double value = 0.0;
  Vector scenario_duals;  // one multiplier per scenario, in scenario order
  double dual_l1 = 0.0;   // sum of scenario multipliers; domain rows excluded
  double gamma = 0.0;
  std::size_t scenario_count = 0;
  std::uint64_t scenario_seed = 0;

  bool optimal() const noexcept { return status == LpStatus::Optimal; }
};

/// LP with one row a(d_i).x <= b(d_i) + gamma per scenario followed by the domain rows.
LinearProgram lower_scenario_program(const UncertainProgram& program, const ScenarioSet& scenarios,
                                     double gamma);

/// min c.x s.t. f(x, d_i) <= gamma for every scenario, x in the domain.
/// Infeasibility is reported through the status, never relaxed.
ScpSolution solve_scp(const UncertainProgram& program, const ScenarioSet& scenarios,
                      double gamma = 0.0);

/// l1 norm of the scenario multipliers. Throws std::logic_error unless optimal.
double dual_l1(const ScpSolution& solution);

struct TieBreakOptions {
  /// Stop when the Frank-Wolfe gap <grad, x - s> falls to this value.
  double gap_tol = 1e-8;
  /// Slack admitted on the c.x <= J* row.
  double value_slack = 1e-9;
  std::size_t max_iterations = 20000;
};

struct TieBreakResult {
  Vector x;
  double gap = 0.0;
  std::size_t iterations = 0;
  std::size_t lp_solves = 0;
};

/// Least-norm point of the scenario program's optimal face: minimizes |x|^2
/// over {x in X : f(x, d_i) <= 0, c.x <= J* + slack}.
///
/// Uses Frank-Wolfe with away steps and exact line search; every linear
/// subproblem is a solve_lp call over the same face, so the result does not
/// depend on the order of the scenarios beyond the stopping tolerance.
/// Throws std::logic_error if the face is empty (J* inconsistent with the
/// scenarios) or the iteration budget runs out.
TieBreakResult tie_break(const UncertainProgram& program, const ScenarioSet& scenarios,
                         double optimal_value, const TieBreakOptions& options = {});

}  // namespace scenopt
