#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "scenopt/bounds.hpp"
#include "scenopt/model.hpp"
#include "scenopt/scenario.hpp"

namespace scenopt {

/// One convex subprogram (X_k, f_k) with its violation level and the optional
/// data needed for its confidence intervals.
struct SubprogramMember {
  UncertainProgram program;
  double eps = 0.0;
  std::optional<SlaterCertificate> slater;
  std::optional<Ulb> ulb;
};

/// Subprograms that share one uncertainty distribution and one decision dimension.
class SubprogramFamily {
 public:
  /// Rebinds every member to `sampler`. Throws std::invalid_argument on an
  /// empty family, mismatched dimensions or an eps outside (0, 1].
  static SubprogramFamily make(std::vector<SubprogramMember> members, Sampler sampler);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dimension() const noexcept { return members_.front().program.dimension(); }
  const std::vector<SubprogramMember>& members() const noexcept { return members_; }
  const SubprogramMember& operator[](std::size_t k) const { return members_.at(k); }
  const Sampler& sampler() const noexcept { return sampler_; }
  std::vector<double> eps() const;

 private:
  SubprogramFamily() = default;

  std::vector<SubprogramMember> members_;
  Sampler sampler_;
};

/// Optimum of the union scenario program: the best feasible member.
struct SpSolution {
  std::optional<std::size_t> winner;  // empty when every member is infeasible
  std::vector<ScpSolution> per_member;
  Vector x;
  double value = 0.0;

  bool feasible() const noexcept { return winner.has_value(); }
};

/// Solves every member on the same scenarios and keeps the minimal value;
/// ties go to the smallest index.
SpSolution solve_sp(const SubprogramFamily& family, const ScenarioSet& scenarios);

/// Maps a binary assignment y (bit k of `assignment` is y_{ell-k}, so the
/// integer reads y as a big-endian word) to the constraint f(., y, .).
using BinaryOracleFactory = std::function<AffineConstraintOracle(std::span<const bool> y)>;

/// Expands binary decision variables into m = 2^ell subprograms over the same
/// domain, member k corresponding to the ell-bit big-endian encoding of k.
/// Refuses ell > 20.
SubprogramFamily binary_expansion(const Vector& cost, const Polytope& domain, const Sampler& sampler,
                                  const BinaryOracleFactory& oracle_for, std::size_t bits, double eps);

/// Scenario count for which the union optimizer is chance-feasible for the
/// union program with probability >= 1 - beta.
std::uint64_t union_feasibility_n(const SubprogramFamily& family, double beta);

/// Aggregated intervals: each member's interval evaluated at its own eps_k,
/// then the maximum over members.
struct UnionReport {
  std::optional<ConfidenceReport> rcp_apriori;
  std::optional<ConfidenceReport> ccp_apriori;
  std::optional<ConfidenceReport> ccp_aposteriori;
  std::vector<std::optional<IntervalBound>> member_apriori;
  std::vector<std::optional<IntervalBound>> member_aposteriori;
  std::uint64_t samples_required = 0;
  bool heterogeneous_eps = false;
  bool partial = false;  // some member lacked certificates; a priori omitted
  std::vector<std::string> notes;
};

UnionReport union_report(const SpSolution& solution, const SubprogramFamily& family, double beta,
                         std::uint64_t samples_used);

}  // namespace scenopt
