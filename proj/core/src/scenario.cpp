#include "scenopt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scenopt {

LinearProgram lower_scenario_program(const UncertainProgram& program, const ScenarioSet& scenarios,
                                     double gamma) {
  if (!(gamma >= 0.0)) throw std::invalid_argument("relaxation level must be nonnegative");
  LinearProgram lp;
  lp.cost = program.cost;
  lp.rows.reserve(scenarios.size() + program.domain.rows().size());
  lp.tags.reserve(lp.rows.capacity());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    HalfSpace row = program.constraint.row(scenarios.points[i]);
    row.b += gamma;
    lp.add_row(std::move(row), RowTag{RowKind::Scenario, i});
  }
  for (std::size_t i = 0; i < program.domain.rows().size(); ++i)
    lp.add_row(program.domain.rows()[i], RowTag{RowKind::Domain, i});
  lp.box = program.domain.box();
  return lp;
}

ScpSolution solve_scp(const UncertainProgram& program, const ScenarioSet& scenarios, double gamma) {
  const LinearProgram lp = lower_scenario_program(program, scenarios, gamma);
  const LpResult r = solve_lp(lp);

  ScpSolution s;
  s.status = r.status;
  s.gamma = gamma;
  s.scenario_count = scenarios.size();
  s.scenario_seed = scenarios.seed;
  if (!r.optimal()) return s;
  s.x = r.x;
  s.value = r.value;
  s.scenario_duals.assign(r.row_duals.begin(),
                          r.row_duals.begin() + static_cast<std::ptrdiff_t>(scenarios.size()));
  for (const double l : s.scenario_duals) s.dual_l1 += std::abs(l);
  return s;
}

double dual_l1(const ScpSolution& solution) {
  if (!solution.optimal()) throw std::logic_error("dual norm requested for a non-optimal solution");
  return solution.dual_l1;
}

namespace {

struct Atom {
  Vector point;
  double weight;
};

bool same_point(const Vector& a, const Vector& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::abs(a[j] - b[j]) > 1e-12 * (1.0 + std::abs(a[j]))) return false;
  }
  return true;
}

}  // namespace

TieBreakResult tie_break(const UncertainProgram& program, const ScenarioSet& scenarios,
                         double optimal_value, const TieBreakOptions& options) {
  LinearProgram face = lower_scenario_program(program, scenarios, 0.0);
  face.add_row(HalfSpace{program.cost, optimal_value + options.value_slack},
               RowTag{RowKind::Objective, 0});

  TieBreakResult result;
  const auto vertex = [&](const Vector& direction) {
    face.cost = direction;
    const LpResult r = solve_lp(face);
    ++result.lp_solves;
    if (!r.optimal()) throw std::logic_error("tie-break face is empty; optimal value is inconsistent");
    return r.x;
  };

  std::vector<Atom> atoms{{vertex(program.cost), 1.0}};
  Vector x = atoms.front().point;
  const std::size_t n = x.size();
  Vector grad(n);
  Vector dir(n);

  for (;; ++result.iterations) {
    for (std::size_t j = 0; j < n; ++j) grad[j] = 2.0 * x[j];
    const Vector s = vertex(grad);
    double fw_gap = 0.0;
    for (std::size_t j = 0; j < n; ++j) fw_gap += grad[j] * (x[j] - s[j]);
    result.gap = fw_gap;
    if (fw_gap <= options.gap_tol) break;
    if (result.iterations >= options.max_iterations)
      throw std::logic_error("tie-break did not reach the requested gap");

    std::size_t away = 0;
    double away_score = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const double score = dot(grad, atoms[a].point);
      if (score > away_score) {
        away_score = score;
        away = a;
      }
    }
    const double away_gap = away_score - dot(grad, x);

    const bool toward = fw_gap >= away_gap || atoms[away].weight >= 1.0;
    double max_step = 1.0;
    if (toward) {
      for (std::size_t j = 0; j < n; ++j) dir[j] = s[j] - x[j];
    } else {
      for (std::size_t j = 0; j < n; ++j) dir[j] = x[j] - atoms[away].point[j];
      max_step = atoms[away].weight / (1.0 - atoms[away].weight);
    }
    const double dd = dot(dir, dir);
    if (dd == 0.0) break;
    const double step = std::clamp(-dot(x, dir) / dd, 0.0, max_step);

    if (toward) {
      if (step >= 1.0) {
        atoms.assign(1, Atom{s, 1.0});
      } else {
        for (auto& atom : atoms) atom.weight *= 1.0 - step;
        auto it = std::find_if(atoms.begin(), atoms.end(),
                               [&](const Atom& atom) { return same_point(atom.point, s); });
        if (it != atoms.end()) {
          it->weight += step;
        } else {
          atoms.push_back(Atom{s, step});
        }
      }
    } else {
      for (auto& atom : atoms) atom.weight *= 1.0 + step;
      atoms[away].weight -= step;
      if (step >= max_step) atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(away));
    }
    std::erase_if(atoms, [](const Atom& atom) { return atom.weight <= 0.0; });

    // Recombine from the atoms so x stays in their convex hull.
    std::fill(x.begin(), x.end(), 0.0);
    double total = 0.0;
    for (const auto& atom : atoms) total += atom.weight;
    for (const auto& atom : atoms) {
      for (std::size_t j = 0; j < n; ++j) x[j] += atom.weight / total * atom.point[j];
    }
  }
  result.x = std::move(x);
  return result;
}

}  // namespace scenopt
