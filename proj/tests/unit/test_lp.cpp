#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "scenopt/lp.hpp"

using namespace scenopt;

namespace {

LinearProgram box_lp(Vector cost, std::vector<Interval> box) {
  LinearProgram lp;
  lp.cost = std::move(cost);
  lp.box = std::move(box);
  return lp;
}

}  // namespace

TEST_CASE("single active row") {
  LinearProgram lp = box_lp({-1.0}, {{-1.0, 1.0}});
  lp.add_row({{1.0}, 1.0}, {RowKind::Scenario, 0});
  const LpResult r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.value == doctest::Approx(-1.0));
  CHECK(r.row_duals[0] == doctest::Approx(1.0));
  CHECK(r.upper_duals[0] == doctest::Approx(0.0));
  const auto kkt = testing::kkt_residuals(lp, r);
  CHECK(kkt.stationarity <= 1e-8);
  CHECK(kkt.complementarity <= 1e-8);
}

TEST_CASE("single row strictly tighter than the box") {
  LinearProgram lp = box_lp({-1.0}, {{-1.0, 2.0}});
  lp.add_row({{1.0}, 1.0}, {RowKind::Scenario, 0});
  const LpResult r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.row_duals[0] == doctest::Approx(1.0));
  CHECK(r.upper_duals[0] == doctest::Approx(0.0));
}

TEST_CASE("axis-aligned cuts on the unit square") {
  LinearProgram lp = box_lp({-1.0, -1.0}, {{0, 1}, {0, 1}});
  lp.add_row({{1.0, 0.0}, 1.0}, {RowKind::Scenario, 0});
  lp.add_row({{0.0, 1.0}, 1.0}, {RowKind::Scenario, 1});
  const LpResult r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == doctest::Approx(-2.0));
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == doctest::Approx(1.0));
}

TEST_CASE("diagonal cut has dual sqrt2") {
  const double s = std::numbers::sqrt2 / 2.0;
  LinearProgram lp = box_lp({-1.0, -1.0}, {{0, 1}, {0, 1}});
  lp.add_row({{s, s}, 1.0}, {RowKind::Scenario, 0});
  const LpResult r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-12));
  CHECK(r.row_duals[0] == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(dual_sum(lp, r, RowKind::Scenario) == doctest::Approx(std::numbers::sqrt2));
  CHECK(dual_sum(lp, r, RowKind::Domain) == 0.0);
  const auto oracle = testing::vertex_enumeration(lp);
  CHECK(oracle.value == doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("infeasible and unbounded are statuses") {
  LinearProgram infeasible = box_lp({1.0}, {{0, 1}});
  infeasible.add_row({{1.0}, -1.0}, {RowKind::Scenario, 0});
  CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

  LinearProgram unbounded;
  unbounded.cost = {-1.0, 0.0};
  unbounded.add_row({{-1.0, 0.0}, 0.0}, {RowKind::Domain, 0});
  unbounded.add_row({{0.0, 1.0}, 1.0}, {RowKind::Domain, 1});
  unbounded.add_row({{0.0, -1.0}, 1.0}, {RowKind::Domain, 2});
  CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);

  LinearProgram both;  // infeasible and with an unbounded recession direction
  both.cost = {-1.0};
  both.add_row({{0.0}, -1.0}, {RowKind::Domain, 0});
  CHECK(solve_lp(both).status == LpStatus::Infeasible);
}

TEST_CASE("free variables without box") {
  LinearProgram lp;
  lp.cost = {1.0, 1.0};
  lp.add_row({{-1.0, 0.0}, 2.0}, {RowKind::Domain, 0});   // x1 >= -2
  lp.add_row({{0.0, -1.0}, -3.0}, {RowKind::Domain, 1});  // x2 >= 3
  const LpResult r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.x[0] == doctest::Approx(-2.0));
  CHECK(r.x[1] == doctest::Approx(3.0));
  CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("random LPs match vertex enumeration") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 300; ++t) {
    const LinearProgram lp = testing::random_bounded_lp(rng, 4, 8);
    const LpResult r = solve_lp(lp);
    const auto oracle = testing::vertex_enumeration(lp);
    INFO("instance " << t);
    REQUIRE(oracle.feasible);
    REQUIRE(r.optimal());
    CHECK(std::abs(r.value - oracle.value) <= 1e-7);
    const auto kkt = testing::kkt_residuals(lp, r);
    CHECK(kkt.stationarity <= 1e-8);
    CHECK(kkt.complementarity <= 1e-8);
    CHECK(kkt.primal <= 1e-9);
    CHECK(kkt.dual_sign <= 0.0);
    CHECK(kkt.gap <= 1e-8);
  }
}

TEST_CASE("solver is deterministic") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const LinearProgram lp = testing::random_bounded_lp(rng, 4, 8);
    const LpResult a = solve_lp(lp);
    const LpResult b = solve_lp(lp);
    CHECK(a.x == b.x);
    CHECK(a.row_duals == b.row_duals);
  }
}

TEST_CASE("many redundant rows") {
  LinearProgram lp = box_lp({-1.0, -2.0}, {{0, 1}, {0, 1}});
  for (std::size_t i = 0; i < 2000; ++i) lp.add_row({{1.0, 1.0}, 1.5}, {RowKind::Scenario, i});
  const LpResult r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == doctest::Approx(-2.5));
  CHECK(dual_sum(lp, r, RowKind::Scenario) == doctest::Approx(1.0));
}

TEST_CASE("value range") {
  const Polytope square = Polytope::from_box({{0, 1}, {0, 1}});
  const ValueRange r = value_range(std::vector<double>{-1.0, -1.0}, square);
  CHECK(r.min == doctest::Approx(-2.0));
  CHECK(r.max == doctest::Approx(0.0));
  CHECK(value_range(std::vector<double>{0.0, 0.0}, square).width() == 0.0);
  const Polytope point = Polytope::from_box({{0.3, 0.3}, {2.0, 2.0}});
  const ValueRange p = value_range(std::vector<double>{1.0, 1.0}, point);
  CHECK(p.min == doctest::Approx(2.3));
  CHECK(p.max == doctest::Approx(2.3));
}
