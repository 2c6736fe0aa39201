#pragma once

#include <vector>

#include "scenopt/model.hpp"

namespace scenopt {

/// Hyperplane family x1 cos d + x2 sin d - 1 <= 0, d ~ uniform[0, 2 pi),
/// over the box [0,1]^2 with cost (-1, -1). Its robust feasible set is the
/// quarter disk of radius 1.
namespace example1 {

AffineConstraintOracle constraint();
Sampler sampler();
UncertainProgram program();

}  // namespace example1

/// min -x s.t. x - d <= 0, d ~ uniform[0, 1), x in [-1, 1]. The scenario
/// optimizer is min_i d_i and almost surely violates the robust constraint.
namespace counterexample {

AffineConstraintOracle constraint();
UncertainProgram program();

}  // namespace counterexample

/// One knot of a tabulated constraint: at uncertainty value d the row is (a, b).
struct AffineKnot {
  double d = 0.0;
  Vector a;
  double b = 0.0;
};

/// Constraint whose (a(d), b(d)) is piecewise linear in scalar d through the
/// knots, held constant outside them. The worst case over d is attained at a
/// knot, which gives the sup oracle in closed form.
AffineConstraintOracle affine_table(std::vector<AffineKnot> knots);

}  // namespace scenopt
