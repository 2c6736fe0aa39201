#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scenopt/lp.hpp"
#include "scenopt/model.hpp"

namespace scenopt {

/// Uniform level-set bound h(eps) = L_d * g^{-1}(eps) built from a Lipschitz
/// constant L_d of d -> f(x, d) (uniform in x) and a lower bound
/// g(r) = kappa * r^power on the probability of every radius-r ball in D.
class Ulb {
 public:
  Ulb(double lipschitz, double kappa, double power);

  double lipschitz() const noexcept { return lipschitz_; }
  double kappa() const noexcept { return kappa_; }
  double power() const noexcept { return power_; }

  double g(double radius) const;
  double g_inverse(double eps) const;
  double operator()(double eps) const { return lipschitz_ * g_inverse(eps); }

 private:
  double lipschitz_;
  double kappa_;
  double power_;
};

/// Throws std::invalid_argument unless L_d > 0, kappa > 0 and power >= 1.
Ulb build_ulb(double lipschitz, double kappa, double power);

/// Strictly feasible point x0 and the perturbation constant
/// L_SP = (min_X c.x - c.x0) / sup_d f(x0, d).
struct SlaterCertificate {
  Vector x0;
  double margin = 0.0;  // sup_d f(x0, d) < 0
  double lsp = 0.0;
  bool minmax = false;  // constant taken as 1 for an epigraph (min-max) program
};

/// Throws std::invalid_argument if sup_value >= 0 or x0 is outside the domain.
SlaterCertificate slater_constant(const UncertainProgram& program, std::span<const double> x0,
                                  double sup_value);

/// As above with sup_value from the constraint's sup oracle.
SlaterCertificate slater_constant(const UncertainProgram& program, std::span<const double> x0);

/// Min-max programs have J*_gamma = J* - gamma, hence constant 1.
SlaterCertificate minmax_slater();

enum class IntervalBranch { Scaled, Range };

const char* to_string(IntervalBranch branch) noexcept;

struct IntervalBound {
  double width = 0.0;
  IntervalBranch branch = IntervalBranch::Scaled;
};

/// min{ L_SP h(eps), max_X c.x - min_X c.x }.
IntervalBound apriori_interval(double lsp, const Ulb& ulb, double eps, double range_width);

/// min{ |lambda*_N|_1 h(eps), max_X c.x - min_X c.x }.
IntervalBound aposteriori_interval(double dual_l1, const Ulb& ulb, double eps, double range_width);

enum class ReportKind { RcpAPriori, CcpAPriori, CcpAPosteriori };

const char* to_string(ReportKind kind) noexcept;

/// Confidence interval for the robust (RCP) or chance-constrained (CCP)
/// optimal value given a scenario optimum J*_N.
struct ConfidenceReport {
  ReportKind kind = ReportKind::RcpAPriori;
  double lo = 0.0;
  double hi = 0.0;
  double eps = 0.0;
  double beta = 0.0;
  std::optional<std::uint64_t> samples_required;  // empty if unachievable
  std::uint64_t samples_used = 0;
  double scenario_value = 0.0;
  IntervalBound bound;
  bool guaranteed = false;  // samples_used >= samples_required
  std::vector<std::string> notes;
};

/// J*_RCP in [J*_N, J*_N + I] with probability >= 1 - beta when guaranteed.
ConfidenceReport rcp_report(double scenario_value, IntervalBound bound, double eps, double beta,
                            std::uint64_t samples_used, std::uint64_t dimension);

/// J*_CCP in [J*_N - I, J*_N] with probability >= 1 - beta when guaranteed.
ConfidenceReport ccp_report(double scenario_value, IntervalBound bound, double eps, double beta,
                            std::uint64_t samples_used, std::uint64_t dimension, ReportKind kind);

/// Scenario count for which J*_RCP - J*_N <= target holds with confidence
/// 1 - beta: sample_size(g(target / (L_SP L_d)), beta, n), the violation level
/// clamped to 1.
std::uint64_t samples_for_precision(double target, double beta, double lsp, const Ulb& ulb,
                                    std::uint64_t dimension);

/// Monte Carlo estimate of p(x, delta) = P[ sup_v f(x, v) - delta < f(x, d) ].
/// Requires the constraint's sup oracle.
ViolationEstimate tail_probability(const UncertainProgram& program, std::span<const double> x,
                                   double delta, std::size_t samples, std::uint64_t seed);

struct UlbCheckEntry {
  Vector x;
  double eps = 0.0;
  double delta = 0.0;  // h(eps)
  double estimate = 0.0;
  double slack = 0.0;  // 3 sigma at eps
  bool ok = true;
};

struct UlbCheckReport {
  std::vector<UlbCheckEntry> entries;
  std::size_t violations = 0;
};

/// Diagnostic for a user-supplied ULB: for every grid point x and level eps,
/// checks p(x, h(eps)) >= eps - 3 sqrt(eps (1 - eps) / K). Not a proof.
UlbCheckReport ulb_empirical_check(const Ulb& ulb, const UncertainProgram& program,
                                   std::span<const Vector> x_grid, std::span<const double> eps_grid,
                                   std::size_t samples, std::uint64_t seed);

}  // namespace scenopt
