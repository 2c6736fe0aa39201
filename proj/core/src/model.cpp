#include "scenopt/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "scenopt/lp.hpp"
#include "scenopt/random.hpp"

namespace scenopt {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

Polytope Polytope::make(std::size_t dimension, std::vector<HalfSpace> rows,
                        std::optional<std::vector<Interval>> box) {
  if (dimension == 0) throw std::invalid_argument("polytope dimension must be positive");
  for (const auto& row : rows) {
    if (row.a.size() != dimension) throw std::invalid_argument("polytope row dimension mismatch");
  }
  if (box) {
    if (box->size() != dimension) throw std::invalid_argument("polytope box dimension mismatch");
    for (const auto& iv : *box) {
      if (!(iv.lo <= iv.hi)) throw std::invalid_argument("polytope is empty (box lo > hi)");
    }
  }

  Polytope p;
  p.dimension_ = dimension;
  p.rows_ = std::move(rows);
  p.box_ = std::move(box);
  p.extent_.resize(dimension);

  LinearProgram lp;
  lp.cost.assign(dimension, 0.0);
  for (std::size_t i = 0; i < p.rows_.size(); ++i) lp.add_row(p.rows_[i], RowTag{RowKind::Domain, i});
  lp.box = p.box_;
  for (std::size_t j = 0; j < dimension; ++j) {
    for (const double direction : {1.0, -1.0}) {
      std::fill(lp.cost.begin(), lp.cost.end(), 0.0);
      lp.cost[j] = direction;
      const LpResult r = solve_lp(lp);
      if (r.status == LpStatus::Infeasible) throw std::invalid_argument("polytope is empty");
      if (r.status == LpStatus::Unbounded) {
        std::ostringstream msg;
        msg << "polytope is unbounded along coordinate " << j;
        throw std::invalid_argument(msg.str());
      }
      if (direction > 0) {
        p.extent_[j].lo = r.value;
      } else {
        p.extent_[j].hi = -r.value;
      }
    }
  }
  return p;
}

Polytope Polytope::from_box(std::vector<Interval> box) {
  const std::size_t n = box.size();
  return make(n, {}, std::move(box));
}

bool Polytope::contains(std::span<const double> x, double tol) const {
  if (x.size() != dimension_) return false;
  if (box_) {
    for (std::size_t j = 0; j < dimension_; ++j) {
      if (x[j] < (*box_)[j].lo - tol || x[j] > (*box_)[j].hi + tol) return false;
    }
  }
  for (const auto& row : rows_) {
    if (dot(row.a, x) > row.b + tol) return false;
  }
  return true;
}

double AffineConstraintOracle::operator()(std::span<const double> x, const UncertaintyPoint& d) const {
  const HalfSpace h = row(d);
  return dot(h.a, x) - h.b;
}

Sampler uniform_interval(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("uniform_interval requires finite lo < hi");
  std::ostringstream desc;
  desc << "uniform[" << lo << ", " << hi << ")";
  return Sampler(
      [lo, hi](std::uint64_t seed, std::uint64_t index) {
        const double u = counter_uniform(seed, index);
        return UncertaintyPoint{lo + (hi - lo) * u};
      },
      desc.str());
}

UncertainProgram UncertainProgram::make(Vector cost, Polytope domain,
                                        AffineConstraintOracle constraint, Sampler sampler) {
  if (cost.size() != domain.dimension())
    throw std::invalid_argument("cost and domain dimensions differ");
  if (!constraint.row) throw std::invalid_argument("constraint oracle is empty");
  if (!sampler) throw std::invalid_argument("sampler is empty");
  const HalfSpace probe = constraint.row(sampler.draw(0, 1));
  if (probe.a.size() != cost.size())
    throw std::invalid_argument("constraint coefficient dimension differs from cost");
  return UncertainProgram{std::move(cost), std::move(domain), std::move(constraint),
                          std::move(sampler)};
}

ScenarioSet sample_scenarios(const Sampler& sampler, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("scenario count must be at least 1");
  ScenarioSet set;
  set.seed = seed;
  set.points.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) set.points.push_back(sampler.draw(seed, i));
  return set;
}

double ViolationEstimate::standard_error() const {
  if (samples == 0) return 0.0;
  return std::sqrt(probability * (1.0 - probability) / static_cast<double>(samples));
}

ViolationEstimate estimate_violation(const UncertainProgram& program, std::span<const double> x,
                                     std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("violation estimate needs at least one sample");
  if (x.size() != program.dimension()) throw std::invalid_argument("decision dimension mismatch");
  ViolationEstimate est;
  est.samples = samples;
  for (std::size_t i = 1; i <= samples; ++i) {
    if (program.constraint(x, program.sampler.draw(seed, i)) > 0.0) ++est.violations;
  }
  est.probability = static_cast<double>(est.violations) / static_cast<double>(samples);
  return est;
}

}  // namespace scenopt
