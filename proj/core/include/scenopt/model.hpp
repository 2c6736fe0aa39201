#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scenopt {

using Vector = std::vector<double>;

/// A point of the uncertainty space. Scalar uncertainty uses size 1.
using UncertaintyPoint = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);

/// The half-space a.x <= b.
struct HalfSpace {
  Vector a;
  double b = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Compact convex decision set {x : a_i.x <= b_i} intersected with an optional box.
///
/// Construction certifies the set is nonempty and bounded by solving one LP per
/// coordinate direction; std::invalid_argument is thrown otherwise.
class Polytope {
 public:
  static Polytope make(std::size_t dimension, std::vector<HalfSpace> rows,
                       std::optional<std::vector<Interval>> box = std::nullopt);
  static Polytope from_box(std::vector<Interval> box);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<HalfSpace>& rows() const noexcept { return rows_; }
  const std::optional<std::vector<Interval>>& box() const noexcept { return box_; }

  /// Per-coordinate [min, max] found during certification.
  const std::vector<Interval>& extent() const noexcept { return extent_; }

  bool contains(std::span<const double> x, double tol = 1e-9) const;

 private:
  Polytope() = default;

  std::size_t dimension_ = 0;
  std::vector<HalfSpace> rows_;
  std::optional<std::vector<Interval>> box_;
  std::vector<Interval> extent_;
};

/// Constraint f(x, d) = a(d).x - b(d), affine in x for every d.
struct AffineConstraintOracle {
  /// d -> (a(d), b(d)).
  std::function<HalfSpace(const UncertaintyPoint&)> row;
  /// Optional closed form of x -> sup_{d in D} f(x, d).
  std::function<double(std::span<const double>)> sup;

  double operator()(std::span<const double> x, const UncertaintyPoint& d) const;
  bool has_sup() const noexcept { return static_cast<bool>(sup); }
};

/// Draws uncertainty points as a pure function of (seed, index).
class Sampler {
 public:
  using DrawFn = std::function<UncertaintyPoint(std::uint64_t seed, std::uint64_t index)>;

  Sampler() = default;
  Sampler(DrawFn draw, std::string description)
      : draw_(std::move(draw)), description_(std::move(description)) {}

  UncertaintyPoint draw(std::uint64_t seed, std::uint64_t index) const { return draw_(seed, index); }
  const std::string& description() const noexcept { return description_; }
  explicit operator bool() const noexcept { return static_cast<bool>(draw_); }

 private:
  DrawFn draw_;
  std::string description_;
};

/// Uniform distribution on [lo, hi).
Sampler uniform_interval(double lo, double hi);

/// min c.x s.t. f(x, d) <= 0 for d ~ sampler, x in domain.
struct UncertainProgram {
  Vector cost;
  Polytope domain;
  AffineConstraintOracle constraint;
  Sampler sampler;

  /// Checks that dimensions of c, the domain and the oracle output agree.
  static UncertainProgram make(Vector cost, Polytope domain, AffineConstraintOracle constraint,
                               Sampler sampler);

  std::size_t dimension() const noexcept { return cost.size(); }
};

struct ScenarioSet {
  std::vector<UncertaintyPoint> points;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return points.size(); }
};

/// Points are sampler outputs at indices 1..count.
ScenarioSet sample_scenarios(const Sampler& sampler, std::size_t count, std::uint64_t seed);

struct ViolationEstimate {
  double probability = 0.0;
  std::size_t violations = 0;
  std::size_t samples = 0;

  /// Binomial standard error at the estimated probability.
  double standard_error() const;
};

/// Monte Carlo estimate of P[f(x, d) > 0].
ViolationEstimate estimate_violation(const UncertainProgram& program, std::span<const double> x,
                                     std::size_t samples, std::uint64_t seed);

}  // namespace scenopt
