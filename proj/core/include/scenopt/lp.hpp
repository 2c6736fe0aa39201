#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "scenopt/model.hpp"

namespace scenopt {

enum class RowKind : std::uint8_t { Domain, Scenario, Objective };

/// Label carried by an LP row so duals can be attributed after the solve.
struct RowTag {
  RowKind kind = RowKind::Domain;
  std::size_t index = 0;
};

/// min c.x  s.t.  a_i.x <= b_i,  lo <= x <= hi (optional box); x otherwise free.
struct LinearProgram {
  Vector cost;
  std::vector<HalfSpace> rows;
  std::vector<RowTag> tags;  // parallel to rows
  std::optional<std::vector<Interval>> box;

  void add_row(HalfSpace row, RowTag tag);
  std::size_t dimension() const noexcept { return cost.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status) noexcept;

/// Primal optimizer, optimal value and Lagrange multipliers.
///
/// With multipliers lambda >= 0 on rows and mu_lo, mu_hi >= 0 on box faces,
/// stationarity reads c + sum_i lambda_i a_i - mu_lo + mu_hi = 0.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vector x;
  double value = 0.0;
  Vector row_duals;    // parallel to LinearProgram::rows
  Vector lower_duals;  // box faces x_j >= lo_j
  Vector upper_duals;  // box faces x_j <= hi_j
  std::size_t iterations = 0;

  bool optimal() const noexcept { return status == LpStatus::Optimal; }
};

/// Sum of row multipliers over rows carrying the given tag kind.
double dual_sum(const LinearProgram& lp, const LpResult& result, RowKind kind);

/// Numerical breakdown (iteration limit or singular basis); not used for
/// infeasible/unbounded outcomes, which are statuses.
class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LpOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-10;
  double pivot_tol = 1e-11;
  /// 0 selects a limit proportional to the problem size.
  std::size_t max_iterations = 0;
};

/// Two-phase primal simplex run on the Lagrange dual of the inequality form.
///
/// The dual has one equality per decision coordinate and one column per row, so
/// the tableau is dim x (rows + dim) and stays small for many-scenario programs.
/// The primal optimizer is read off as the simplex multipliers of the dual.
/// Pivoting is deterministic: Dantzig pricing, falling back to Bland's rule
/// after a run of degenerate pivots.
LpResult solve_lp(const LinearProgram& lp, const LpOptions& options = {});

struct ValueRange {
  double min = 0.0;
  double max = 0.0;

  double width() const noexcept { return max - min; }
};

/// (min, max) of c.x over a bounded polytope.
ValueRange value_range(std::span<const double> cost, const Polytope& domain);

/// LP over the polytope with the given cost; rows are tagged Domain.
LinearProgram domain_program(std::span<const double> cost, const Polytope& domain);

}  // namespace scenopt
