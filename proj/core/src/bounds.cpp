#include "scenopt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "detail/parallel.hpp"
#include "scenopt/sample_size.hpp"

namespace scenopt {

Ulb::Ulb(double lipschitz, double kappa, double power)
    : lipschitz_(lipschitz), kappa_(kappa), power_(power) {
  if (!(lipschitz > 0.0) || !std::isfinite(lipschitz))
    throw std::invalid_argument("ULB Lipschitz constant must be positive and finite");
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("ball-measure bound needs kappa > 0");
  if (!(power >= 1.0) || !std::isfinite(power))
    throw std::invalid_argument("ball-measure bound needs power >= 1");
}

double Ulb::g(double radius) const {
  if (radius < 0.0) throw std::invalid_argument("radius must be nonnegative");
  return kappa_ * std::pow(radius, power_);
}

double Ulb::g_inverse(double eps) const {
  if (eps < 0.0) throw std::invalid_argument("violation level must be nonnegative");
  return std::pow(eps / kappa_, 1.0 / power_);
}

Ulb build_ulb(double lipschitz, double kappa, double power) { return Ulb(lipschitz, kappa, power); }

SlaterCertificate slater_constant(const UncertainProgram& program, std::span<const double> x0,
                                  double sup_value) {
  if (!(sup_value < 0.0)) {
    std::ostringstream msg;
    msg << "not a Slater point: sup_d f(x0, d) = " << sup_value << " is not negative";
    throw std::invalid_argument(msg.str());
  }
  if (!program.domain.contains(x0)) throw std::invalid_argument("Slater point lies outside the domain");
  const ValueRange range = value_range(program.cost, program.domain);
  SlaterCertificate cert;
  cert.x0.assign(x0.begin(), x0.end());
  cert.margin = sup_value;
  cert.lsp = (range.min - dot(program.cost, x0)) / sup_value;
  cert.lsp = std::max(0.0, cert.lsp);
  return cert;
}

SlaterCertificate slater_constant(const UncertainProgram& program, std::span<const double> x0) {
  if (!program.constraint.has_sup())
    throw std::invalid_argument("constraint has no sup oracle; pass sup_d f(x0, d) explicitly");
  return slater_constant(program, x0, program.constraint.sup(x0));
}

SlaterCertificate minmax_slater() {
  SlaterCertificate cert;
  cert.lsp = 1.0;
  cert.minmax = true;
  return cert;
}

const char* to_string(IntervalBranch branch) noexcept {
  return branch == IntervalBranch::Scaled ? "scaled" : "range";
}

const char* to_string(ReportKind kind) noexcept {
  switch (kind) {
    case ReportKind::RcpAPriori:
      return "rcp_a_priori";
    case ReportKind::CcpAPriori:
      return "ccp_a_priori";
    case ReportKind::CcpAPosteriori:
      return "ccp_a_posteriori";
  }
  return "unknown";
}

namespace {

IntervalBound capped(double constant, const Ulb& ulb, double eps, double range_width) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  if (!(range_width >= 0.0)) throw std::invalid_argument("objective range must be nonnegative");
  if (!(constant >= 0.0)) throw std::invalid_argument("interval constant must be nonnegative");
  const double scaled = constant * ulb(eps);
  if (scaled <= range_width) return {scaled, IntervalBranch::Scaled};
  return {range_width, IntervalBranch::Range};
}

ConfidenceReport base_report(double scenario_value, IntervalBound bound, double eps, double beta,
                             std::uint64_t samples_used, std::uint64_t dimension) {
  ConfidenceReport r;
  r.eps = eps;
  r.beta = beta;
  r.samples_used = samples_used;
  r.scenario_value = scenario_value;
  r.bound = bound;
  try {
    r.samples_required = sample_size(eps, beta, dimension);
    r.guaranteed = samples_used >= *r.samples_required;
  } catch (const UnachievableError&) {
    r.notes.emplace_back("no finite scenario count reaches this (eps, beta)");
  }
  if (!r.guaranteed && r.samples_required)
    r.notes.emplace_back("scenario count below the required sample size; no guarantee");
  return r;
}

}  // namespace

IntervalBound apriori_interval(double lsp, const Ulb& ulb, double eps, double range_width) {
  return capped(lsp, ulb, eps, range_width);
}

IntervalBound aposteriori_interval(double dual_l1, const Ulb& ulb, double eps, double range_width) {
  return capped(dual_l1, ulb, eps, range_width);
}

ConfidenceReport rcp_report(double scenario_value, IntervalBound bound, double eps, double beta,
                            std::uint64_t samples_used, std::uint64_t dimension) {
  ConfidenceReport r = base_report(scenario_value, bound, eps, beta, samples_used, dimension);
  r.kind = ReportKind::RcpAPriori;
  r.lo = scenario_value;
  r.hi = scenario_value + bound.width;
  return r;
}

ConfidenceReport ccp_report(double scenario_value, IntervalBound bound, double eps, double beta,
                            std::uint64_t samples_used, std::uint64_t dimension, ReportKind kind) {
  if (kind == ReportKind::RcpAPriori) throw std::invalid_argument("ccp_report needs a CCP kind");
  ConfidenceReport r = base_report(scenario_value, bound, eps, beta, samples_used, dimension);
  r.kind = kind;
  r.lo = scenario_value - bound.width;
  r.hi = scenario_value;
  return r;
}

std::uint64_t samples_for_precision(double target, double beta, double lsp, const Ulb& ulb,
                                    std::uint64_t dimension) {
  if (!(target > 0.0)) throw std::invalid_argument("target precision must be positive");
  if (!(lsp >= 0.0)) throw std::invalid_argument("L_SP must be nonnegative");
  const double scale = lsp * ulb.lipschitz();
  double eps = 1.0;
  if (scale > 0.0) {
    const double radius = target / scale;
    eps = std::isfinite(radius) ? std::min(1.0, ulb.g(radius)) : 1.0;
  }
  return sample_size(eps, beta, dimension);
}

ViolationEstimate tail_probability(const UncertainProgram& program, std::span<const double> x,
                                   double delta, std::size_t samples, std::uint64_t seed) {
  if (!program.constraint.has_sup()) throw std::invalid_argument("tail probability needs a sup oracle");
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const double threshold = program.constraint.sup(x) - delta;
  ViolationEstimate est;
  est.samples = samples;
  for (std::size_t i = 1; i <= samples; ++i) {
    if (threshold < program.constraint(x, program.sampler.draw(seed, i))) ++est.violations;
  }
  est.probability = static_cast<double>(est.violations) / static_cast<double>(samples);
  return est;
}

UlbCheckReport ulb_empirical_check(const Ulb& ulb, const UncertainProgram& program,
                                   std::span<const Vector> x_grid, std::span<const double> eps_grid,
                                   std::size_t samples, std::uint64_t seed) {
  UlbCheckReport report;
  report.entries.resize(x_grid.size() * eps_grid.size());
  detail::parallel_for(x_grid.size(), [&](std::size_t i) {
    for (std::size_t k = 0; k < eps_grid.size(); ++k) {
      UlbCheckEntry& e = report.entries[i * eps_grid.size() + k];
      e.x = x_grid[i];
      e.eps = eps_grid[k];
      e.delta = ulb(e.eps);
      e.estimate = tail_probability(program, e.x, e.delta, samples, seed).probability;
      e.slack = 3.0 * std::sqrt(e.eps * (1.0 - e.eps) / static_cast<double>(samples));
      e.ok = e.estimate >= e.eps - e.slack;
    }
  });
  for (const auto& e : report.entries) report.violations += e.ok ? 0 : 1;
  return report;
}

}  // namespace scenopt
