#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "scenopt/bounds.hpp"
#include "scenopt/builtin.hpp"

namespace scenopt {

namespace example1 {

/// Optimal value of the gamma-relaxed robust program: max{-sqrt2 (gamma + 1), -2}.
double analytic_rcp(double gamma);

/// Optimal value of the chance-constrained program: max{-sqrt2 / cos(pi eps), -2}.
/// Throws std::domain_error for eps outside [0, 1/2).
double analytic_ccp(double eps);

/// Chance-constrained optimum for any eps in [0, 1]. The box corner (1, 1)
/// violates with probability exactly 1/4, so the value is -2 from eps = 1/4 on.
double ccp_reference(double eps);

/// Confidence parameter for n = 2: (1 - eps)^N + N eps (1 - eps)^(N-1).
double beta_star(double eps, std::uint64_t samples);

/// h(eps) = sqrt2 pi eps from L_d = sqrt2 and g(r) = r / pi.
Ulb ulb();

}  // namespace example1

/// Smallest width w such that at least ceil((1 - beta) M) of the given
/// nonnegative gaps lie in [0, w]; +inf entries mark experiments that no
/// width can cover. Values in [-1e-9, 0) are treated as 0.
double empirical_interval(std::span<const double> gaps, double beta);

struct Example1Config {
  std::uint64_t samples = 60;       // scenarios per experiment
  std::uint64_t experiments = 2000;
  std::vector<double> eps_grid;
  std::uint64_t seed = 1;
  std::size_t designated = 0;  // experiment supplying the plotted a posteriori curve
};

/// Evenly spaced grid "lo:hi:count" with both endpoints included.
std::vector<double> parse_grid(const std::string& text);

struct ExperimentRow {
  double eps = 0.0;
  double beta_star = 0.0;
  double interval = 0.0;            // I(eps)
  double empirical_rcp = 0.0;       // I~(beta*(eps))
  double empirical_ccp = 0.0;       // I~_eps(beta*(eps))
  double aposteriori = 0.0;         // I_N(eps) of the designated experiment
  double coverage_rcp = 0.0;
  double coverage_ccp = 0.0;
};

struct Example1Run {
  std::vector<ExperimentRow> rows;
  std::vector<double> scenario_values;  // J*_N(k)
  std::vector<double> dual_norms;       // |lambda*_N(k)|_1
  double lsp = 0.0;
  double range = 0.0;
};

/// Solves the scenario program for every experiment (seeds derived from the
/// run seed) and tabulates theoretical against empirical intervals per eps.
Example1Run run_example1(const Example1Config& config);

inline constexpr const char* kExample1CsvHeader =
    "eps,beta_star,I_eps,I_tilde,I_tilde_eps,I_N_eps,coverage_rcp,coverage_ccp";

void write_csv(std::ostream& out, std::span<const ExperimentRow> rows);

struct CounterexampleReport {
  std::uint64_t samples = 0;
  std::uint64_t runs = 0;
  std::uint64_t mismatches = 0;    // runs where x*_N != min d_i beyond 1e-9
  std::uint64_t robust_feasible = 0;  // runs with x*_N <= 0
  double max_error = 0.0;
};

/// Repeats the one-dimensional scenario program min -x s.t. x <= d_i.
CounterexampleReport run_counterexample(std::uint64_t samples, std::uint64_t runs, std::uint64_t seed);

}  // namespace scenopt
