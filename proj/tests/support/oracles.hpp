#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "scenopt/lp.hpp"

namespace scenopt::testing {

/// Binomial tail summed in exact rational arithmetic, rounded once to double.
double exact_binomial_tail(std::uint64_t samples, std::uint64_t dimension, double eps);

/// Tail from lgamma terms in long double, no shared code with the library.
long double lgamma_binomial_tail(std::uint64_t samples, std::uint64_t dimension, double eps);

/// First N = 1, 2, ... with m * tail(N) <= beta.
std::uint64_t sample_size_scan(double eps, double beta, std::uint64_t dimension, std::uint64_t m = 1);

struct VertexOptimum {
  bool feasible = false;
  double value = 0.0;
  std::vector<double> x;
};

/// Best feasible basic point: every choice of n active constraints among the
/// rows and box faces. Only meaningful for bounded LPs.
VertexOptimum vertex_enumeration(const LinearProgram& lp);

struct KktResiduals {
  double stationarity = 0.0;     // max |c + A'lambda - mu_lo + mu_hi|
  double complementarity = 0.0;  // max |multiplier * slack|
  double primal = 0.0;           // max constraint violation
  double dual_sign = 0.0;        // max negative part of any multiplier
  double gap = 0.0;              // |c.x + b'lambda - lo'mu_lo + hi'mu_hi|
};

KktResiduals kkt_residuals(const LinearProgram& lp, const LpResult& result);

/// Random LP with a box and up to `max_rows` rows, feasible by construction.
/// About a third of the instances put every row through one point.
LinearProgram random_bounded_lp(std::mt19937_64& rng, std::size_t max_dim, std::size_t max_rows);

/// Minimal w with at least ceil((1 - beta) M) gaps in [0, w], by enumerating subsets.
double empirical_interval_bruteforce(std::span<const double> gaps, double beta);

/// Fraction of the midpoint grid d_j = 2 pi (j + 1/2) / K on which
/// x1 cos d + x2 sin d - 1 > 0.
double example1_violation_quadrature(double x1, double x2, std::size_t grid);

/// Example 1 optima on a K-point grid of [0, 2 pi): the feasible set is
/// star-shaped about the origin, so each direction theta in [0, pi/2] gives a
/// maximal radius; the objective is then minimized over theta.
double example1_numeric_rcp(double gamma, std::size_t grid);
double example1_numeric_ccp(double eps, std::size_t grid);

}  // namespace scenopt::testing
