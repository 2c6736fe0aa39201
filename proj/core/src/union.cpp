#include "scenopt/union.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "detail/parallel.hpp"
#include "scenopt/sample_size.hpp"

namespace scenopt {

SubprogramFamily SubprogramFamily::make(std::vector<SubprogramMember> members, Sampler sampler) {
  if (members.empty()) throw std::invalid_argument("subprogram family needs at least one member");
  if (!sampler) throw std::invalid_argument("subprogram family needs a sampler");
  const std::size_t n = members.front().program.dimension();
  for (auto& m : members) {
    if (m.program.dimension() != n)
      throw std::invalid_argument("all subprograms must share the decision dimension");
    if (!(m.eps > 0.0 && m.eps <= 1.0))
      throw std::invalid_argument("subprogram violation level must lie in (0, 1]");
    m.program.sampler = sampler;
  }
  SubprogramFamily family;
  family.members_ = std::move(members);
  family.sampler_ = std::move(sampler);
  return family;
}

std::vector<double> SubprogramFamily::eps() const {
  std::vector<double> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.eps);
  return out;
}

SpSolution solve_sp(const SubprogramFamily& family, const ScenarioSet& scenarios) {
  SpSolution sp;
  sp.per_member.resize(family.size());
  detail::parallel_for(family.size(), [&](std::size_t k) {
    sp.per_member[k] = solve_scp(family[k].program, scenarios);
  });
  for (std::size_t k = 0; k < family.size(); ++k) {
    const ScpSolution& s = sp.per_member[k];
    if (!s.optimal()) continue;
    if (!sp.winner || s.value < sp.value) {
      sp.winner = k;
      sp.value = s.value;
      sp.x = s.x;
    }
  }
  return sp;
}

SubprogramFamily binary_expansion(const Vector& cost, const Polytope& domain, const Sampler& sampler,
                                  const BinaryOracleFactory& oracle_for, std::size_t bits, double eps) {
  if (bits > 20) throw std::invalid_argument("binary expansion limited to 20 variables");
  const std::size_t count = std::size_t{1} << bits;
  std::vector<SubprogramMember> members;
  members.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    bool y[20] = {};
    for (std::size_t i = 0; i < bits; ++i) y[i] = ((k >> (bits - 1 - i)) & 1U) != 0;
    SubprogramMember m{UncertainProgram::make(cost, domain, oracle_for(std::span<const bool>(y, bits)),
                                              sampler),
                       eps, std::nullopt, std::nullopt};
    members.push_back(std::move(m));
  }
  return SubprogramFamily::make(std::move(members), sampler);
}

std::uint64_t union_feasibility_n(const SubprogramFamily& family, double beta) {
  const std::vector<double> eps = family.eps();
  return sample_size_union(eps, beta, family.dimension());
}

namespace {

ConfidenceReport aggregate(ReportKind kind, double scenario_value, IntervalBound bound, double eps,
                           double beta, std::uint64_t required, std::uint64_t used) {
  ConfidenceReport r;
  r.kind = kind;
  r.eps = eps;
  r.beta = beta;
  r.samples_required = required;
  r.samples_used = used;
  r.scenario_value = scenario_value;
  r.bound = bound;
  r.guaranteed = used >= required;
  if (kind == ReportKind::RcpAPriori) {
    r.lo = scenario_value;
    r.hi = scenario_value + bound.width;
  } else {
    r.lo = scenario_value - bound.width;
    r.hi = scenario_value;
  }
  if (!r.guaranteed) r.notes.emplace_back("scenario count below the union sample size; no guarantee");
  return r;
}

// Largest width; the branch reported is that of the maximizing member.
IntervalBound widest(const std::vector<std::optional<IntervalBound>>& bounds) {
  IntervalBound best{-1.0, IntervalBranch::Scaled};
  for (const auto& b : bounds) {
    if (b && b->width > best.width) best = *b;
  }
  return best;
}

}  // namespace

UnionReport union_report(const SpSolution& solution, const SubprogramFamily& family, double beta,
                         std::uint64_t samples_used) {
  if (solution.per_member.size() != family.size())
    throw std::invalid_argument("solution does not match the family");
  UnionReport report;
  report.samples_required = union_feasibility_n(family, beta);
  const std::vector<double> eps = family.eps();
  const double eps_max = *std::max_element(eps.begin(), eps.end());
  report.heterogeneous_eps =
      std::any_of(eps.begin(), eps.end(), [&](double e) { return e != eps.front(); });
  if (report.heterogeneous_eps)
    report.notes.emplace_back("violation levels differ; member k interval evaluated at eps_k");

  bool apriori_complete = true;
  bool aposteriori_complete = true;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const SubprogramMember& m = family[k];
    const double range = value_range(m.program.cost, m.program.domain).width();
    std::ostringstream who;
    who << "member " << k;
    if (m.ulb && m.slater) {
      report.member_apriori.emplace_back(apriori_interval(m.slater->lsp, *m.ulb, m.eps, range));
    } else {
      report.member_apriori.emplace_back(std::nullopt);
      apriori_complete = false;
      report.notes.push_back(who.str() + ": missing Slater or ULB data; a priori unavailable");
    }
    const ScpSolution& s = solution.per_member[k];
    if (!m.ulb) {
      report.member_aposteriori.emplace_back(std::nullopt);
      aposteriori_complete = false;
      report.notes.push_back(who.str() + ": missing ULB; a posteriori unavailable");
    } else if (!s.optimal()) {
      report.member_aposteriori.emplace_back(IntervalBound{range, IntervalBranch::Range});
      report.notes.push_back(who.str() + ": scenario program infeasible; range bound used");
    } else {
      report.member_aposteriori.emplace_back(aposteriori_interval(s.dual_l1, *m.ulb, m.eps, range));
    }
  }
  report.partial = !apriori_complete || !aposteriori_complete;

  if (!solution.feasible()) {
    report.notes.emplace_back("union scenario program infeasible; no intervals");
    return report;
  }
  if (apriori_complete) {
    const IntervalBound b = widest(report.member_apriori);
    report.rcp_apriori = aggregate(ReportKind::RcpAPriori, solution.value, b, eps_max, beta,
                                   report.samples_required, samples_used);
    report.ccp_apriori = aggregate(ReportKind::CcpAPriori, solution.value, b, eps_max, beta,
                                   report.samples_required, samples_used);
  }
  if (aposteriori_complete) {
    report.ccp_aposteriori =
        aggregate(ReportKind::CcpAPosteriori, solution.value, widest(report.member_aposteriori),
                  eps_max, beta, report.samples_required, samples_used);
  }
  return report;
}

}  // namespace scenopt
