#include "scenopt/builtin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace scenopt {

namespace example1 {

AffineConstraintOracle constraint() {
  AffineConstraintOracle oracle;
  oracle.row = [](const UncertaintyPoint& d) {
    return HalfSpace{{std::cos(d.at(0)), std::sin(d.at(0))}, 1.0};
  };
  // sup over the full circle of x.(cos d, sin d) is |x|.
  oracle.sup = [](std::span<const double> x) { return std::hypot(x[0], x[1]) - 1.0; };
  return oracle;
}

Sampler sampler() { return uniform_interval(0.0, 2.0 * std::numbers::pi); }

UncertainProgram program() {
  return UncertainProgram::make({-1.0, -1.0}, Polytope::from_box({{0.0, 1.0}, {0.0, 1.0}}),
                                constraint(), sampler());
}

}  // namespace example1

namespace counterexample {

AffineConstraintOracle constraint() {
  AffineConstraintOracle oracle;
  oracle.row = [](const UncertaintyPoint& d) { return HalfSpace{{1.0}, d.at(0)}; };
  oracle.sup = [](std::span<const double> x) { return x[0]; };
  return oracle;
}

UncertainProgram program() {
  return UncertainProgram::make({-1.0}, Polytope::from_box({{-1.0, 1.0}}), constraint(),
                                uniform_interval(0.0, 1.0));
}

}  // namespace counterexample

AffineConstraintOracle affine_table(std::vector<AffineKnot> knots) {
  if (knots.empty()) throw std::invalid_argument("affine_table needs at least one knot");
  std::sort(knots.begin(), knots.end(),
            [](const AffineKnot& l, const AffineKnot& r) { return l.d < r.d; });
  const std::size_t n = knots.front().a.size();
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].a.size() != n) throw std::invalid_argument("affine_table knots differ in dimension");
    if (i > 0 && !(knots[i].d > knots[i - 1].d))
      throw std::invalid_argument("affine_table knots must have distinct d");
  }

  AffineConstraintOracle oracle;
  oracle.row = [knots](const UncertaintyPoint& point) {
    const double d = point.at(0);
    if (d <= knots.front().d) return HalfSpace{knots.front().a, knots.front().b};
    if (d >= knots.back().d) return HalfSpace{knots.back().a, knots.back().b};
    const auto hi = std::upper_bound(knots.begin(), knots.end(), d,
                                     [](double v, const AffineKnot& k) { return v < k.d; });
    const auto lo = hi - 1;
    const double t = (d - lo->d) / (hi->d - lo->d);
    HalfSpace h;
    h.a.resize(lo->a.size());
    for (std::size_t j = 0; j < h.a.size(); ++j) h.a[j] = (1.0 - t) * lo->a[j] + t * hi->a[j];
    h.b = (1.0 - t) * lo->b + t * hi->b;
    return h;
  };
  oracle.sup = [knots](std::span<const double> x) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& k : knots) best = std::max(best, dot(k.a, x) - k.b);
    return best;
  };
  return oracle;
}

}  // namespace scenopt
