#include "scenopt/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace scenopt {

void LinearProgram::add_row(HalfSpace row, RowTag tag) {
  rows.push_back(std::move(row));
  tags.push_back(tag);
}

const char* to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

double dual_sum(const LinearProgram& lp, const LpResult& result, RowKind kind) {
  double sum = 0.0;
  for (std::size_t i = 0; i < result.row_duals.size(); ++i) {
    const RowKind k = i < lp.tags.size() ? lp.tags[i].kind : RowKind::Domain;
    if (k == kind) sum += result.row_duals[i];
  }
  return sum;
}

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class DualStatus { Optimal, Infeasible, Unbounded };

struct DualOutcome {
  DualStatus status = DualStatus::Infeasible;
  Eigen::VectorXd lambda;  // one multiplier per primal row
  Eigen::VectorXd y;       // primal point
  std::size_t iterations = 0;
};

// Standard-form problem  min b.lam  s.t.  A^T lam = -c,  lam >= 0,
// where A is rows x dim. Its Lagrange dual is  min c.y  s.t.  A y <= b.
class DualTableau {
 public:
  DualTableau(const RowMatrix& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
              const LpOptions& options)
      : a_(a), b_(b), opts_(options), m_(a.rows()), k_(a.cols()) {
    const Eigen::Index cols = m_ + k_ + 1;
    t_ = RowMatrix::Zero(k_ + 1, cols);
    sign_.assign(static_cast<std::size_t>(k_), 1.0);
    rhs_.resize(k_);
    active_.assign(static_cast<std::size_t>(k_), true);
    basis_.resize(static_cast<std::size_t>(k_));
    for (Eigen::Index j = 0; j < k_; ++j) {
      const double r = -c(j);
      const double s = r < 0.0 ? -1.0 : 1.0;
      sign_[static_cast<std::size_t>(j)] = s;
      rhs_(j) = s * r;
      t_.row(j).head(m_) = s * a_.col(j).transpose();
      t_(j, m_ + j) = 1.0;
      t_(j, cols - 1) = rhs_(j);
      basis_[static_cast<std::size_t>(j)] = m_ + j;
    }
    limit_ = options.max_iterations != 0
                 ? options.max_iterations
                 : 50 * static_cast<std::size_t>(m_ + k_) + 1000;
  }

  DualOutcome solve() {
    DualOutcome out;
    // Phase 1: minimize the sum of artificials.
    for (Eigen::Index i = 0; i < m_; ++i) t_(k_, i) = -t_.col(i).head(k_).sum();
    t_(k_, last()) = -t_.col(last()).head(k_).sum();
    if (run(m_ + k_) == Step::Unbounded) throw LpError("phase 1 reported unbounded");
    const double infeasibility = -t_(k_, last());
    const double scale = std::max(1.0, rhs_.size() ? rhs_.cwiseAbs().maxCoeff() : 0.0);
    if (infeasibility > opts_.feasibility_tol * scale) {
      out.status = DualStatus::Infeasible;
      out.iterations = iterations_;
      return out;
    }
    drive_out_artificials();

    // Phase 2: original costs; artificial columns may no longer enter.
    t_.row(k_).setZero();
    for (Eigen::Index i = 0; i < m_; ++i) t_(k_, i) = b_(i);
    for (Eigen::Index r = 0; r < k_; ++r) {
      if (!active_[static_cast<std::size_t>(r)]) continue;
      const double cb = cost(basis_[static_cast<std::size_t>(r)]);
      if (cb != 0.0) t_.row(k_) -= cb * t_.row(r);
    }
    if (run(m_) == Step::Unbounded) {
      out.status = DualStatus::Unbounded;
      out.iterations = iterations_;
      return out;
    }
    out.status = DualStatus::Optimal;
    out.iterations = iterations_;
    extract(out);
    return out;
  }

 private:
  enum class Step { Optimal, Unbounded };

  Eigen::Index last() const { return m_ + k_; }
  double cost(Eigen::Index col) const { return col < m_ ? b_(col) : 0.0; }

  Step run(Eigen::Index entering_limit) {
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (;;) {
      Eigen::Index enter = -1;
      double best = -opts_.optimality_tol;
      for (Eigen::Index j = 0; j < entering_limit; ++j) {
        const double d = t_(k_, j);
        if (d < best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter < 0) return Step::Optimal;

      Eigen::Index leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < k_; ++r) {
        if (!active_[static_cast<std::size_t>(r)]) continue;
        const double coef = t_(r, enter);
        if (coef <= opts_.pivot_tol) continue;
        const double ratio = std::max(0.0, t_(r, last())) / coef;
        const double tie = 1e-12 * (1.0 + std::abs(best_ratio));
        if (leave < 0 || ratio < best_ratio - tie) {
          best_ratio = ratio;
          leave = r;
        } else if (ratio <= best_ratio + tie &&
                   basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)]) {
          leave = r;
        }
      }
      if (leave < 0) return Step::Unbounded;

      if (best_ratio <= 1e-13) {
        if (++degenerate_run > 50) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      if (++iterations_ > limit_) throw LpError("simplex iteration limit reached");
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index r = 0; r <= k_; ++r) {
      if (r == row) continue;
      if (r < k_ && !active_[static_cast<std::size_t>(r)]) continue;
      const double f = t_(r, col);
      if (f != 0.0) {
        t_.row(r) -= f * t_.row(row);
        t_(r, col) = 0.0;
      }
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Artificials left in the basis at level zero are pivoted out; a row with no
  // usable pivot is a linearly dependent equality and is dropped.
  void drive_out_artificials() {
    for (Eigen::Index r = 0; r < k_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < m_) continue;
      Eigen::Index col = -1;
      double best = 1e-9;
      for (Eigen::Index j = 0; j < m_; ++j) {
        const double v = std::abs(t_(r, j));
        if (v > best) {
          best = v;
          col = j;
        }
      }
      if (col >= 0) {
        pivot(r, col);
      } else {
        active_[static_cast<std::size_t>(r)] = false;
      }
    }
  }

  void extract(DualOutcome& out) const {
    out.lambda = Eigen::VectorXd::Zero(m_);
    out.y = Eigen::VectorXd::Zero(k_);
    std::vector<Eigen::Index> rows;
    for (Eigen::Index r = 0; r < k_; ++r) {
      if (!active_[static_cast<std::size_t>(r)]) continue;
      rows.push_back(r);
      out.lambda(basis_[static_cast<std::size_t>(r)]) = std::max(0.0, t_(r, last()));
      out.y(r) = -sign_[static_cast<std::size_t>(r)] * t_(k_, m_ + r);
    }
    refine(out, rows);
  }

  // Recompute basic multipliers and the primal point from the final basis to
  // remove error accumulated over the pivots.
  void refine(DualOutcome& out, const std::vector<Eigen::Index>& rows) const {
    const auto size = static_cast<Eigen::Index>(rows.size());
    if (size == 0) return;
    Eigen::MatrixXd basis(size, size);
    Eigen::VectorXd rhs(size);
    Eigen::VectorXd cb(size);
    for (Eigen::Index q = 0; q < size; ++q) {
      const Eigen::Index col = basis_[static_cast<std::size_t>(rows[static_cast<std::size_t>(q)])];
      cb(q) = b_(col);
      for (Eigen::Index p = 0; p < size; ++p) {
        const Eigen::Index r = rows[static_cast<std::size_t>(p)];
        basis(p, q) = sign_[static_cast<std::size_t>(r)] * a_(col, r);
      }
    }
    for (Eigen::Index p = 0; p < size; ++p) rhs(p) = rhs_(rows[static_cast<std::size_t>(p)]);

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
    if (!(lu.rcond() > 1e-13)) return;
    const Eigen::VectorXd lam_b = lu.solve(rhs);
    if (lam_b.minCoeff() < -1e-9 * std::max(1.0, lam_b.cwiseAbs().maxCoeff())) return;
    const Eigen::VectorXd pi = lu.transpose().solve(cb);
    for (Eigen::Index q = 0; q < size; ++q) {
      const Eigen::Index col = basis_[static_cast<std::size_t>(rows[static_cast<std::size_t>(q)])];
      out.lambda(col) = std::max(0.0, lam_b(q));
    }
    for (Eigen::Index p = 0; p < size; ++p) {
      const Eigen::Index r = rows[static_cast<std::size_t>(p)];
      out.y(r) = sign_[static_cast<std::size_t>(r)] * pi(p);
    }
  }

  const RowMatrix& a_;
  const Eigen::VectorXd& b_;
  LpOptions opts_;
  Eigen::Index m_;
  Eigen::Index k_;
  RowMatrix t_;
  std::vector<double> sign_;
  Eigen::VectorXd rhs_;
  std::vector<bool> active_;
  std::vector<Eigen::Index> basis_;
  std::size_t iterations_ = 0;
  std::size_t limit_ = 0;
};

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.dimension();
  if (n == 0) throw std::invalid_argument("linear program has dimension 0");
  if (!lp.tags.empty() && lp.tags.size() != lp.rows.size())
    throw std::invalid_argument("row tags must be parallel to rows");
  for (const auto& row : lp.rows) {
    if (row.a.size() != n) throw std::invalid_argument("row dimension mismatch");
    if (!std::isfinite(row.b)) throw std::invalid_argument("row bound must be finite");
  }
  if (lp.box) {
    if (lp.box->size() != n) throw std::invalid_argument("box dimension mismatch");
    for (const auto& iv : *lp.box) {
      if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
        throw std::invalid_argument("box entries must be finite");
    }
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const LpOptions& options) {
  validate(lp);
  const auto n = static_cast<Eigen::Index>(lp.dimension());
  const auto rows = static_cast<Eigen::Index>(lp.rows.size());
  const Eigen::Index boxed = lp.box ? 2 * n : 0;
  const Eigen::Index m = rows + boxed;

  RowMatrix a = RowMatrix::Zero(m, n);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = lp.rows[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = row.a[static_cast<std::size_t>(j)];
    b(i) = row.b;
  }
  if (lp.box) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& iv = (*lp.box)[static_cast<std::size_t>(j)];
      a(rows + j, j) = 1.0;
      b(rows + j) = iv.hi;
      a(rows + n + j, j) = -1.0;
      b(rows + n + j) = -iv.lo;
    }
  }
  Eigen::VectorXd c(n);
  for (Eigen::Index j = 0; j < n; ++j) c(j) = lp.cost[static_cast<std::size_t>(j)];

  LpResult result;
  DualTableau tableau(a, b, c, options);
  DualOutcome out = tableau.solve();
  result.iterations = out.iterations;

  if (out.status == DualStatus::Unbounded) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  if (out.status == DualStatus::Infeasible) {
    // Either the primal is unbounded or it is infeasible; decide with a zero cost.
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
    DualTableau feasibility(a, b, zero, options);
    const DualOutcome probe = feasibility.solve();
    result.iterations += probe.iterations;
    result.status = probe.status == DualStatus::Unbounded ? LpStatus::Infeasible : LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x.assign(out.y.data(), out.y.data() + n);
  result.value = dot(lp.cost, result.x);
  result.row_duals.assign(out.lambda.data(), out.lambda.data() + rows);
  if (lp.box) {
    result.upper_duals.assign(out.lambda.data() + rows, out.lambda.data() + rows + n);
    result.lower_duals.assign(out.lambda.data() + rows + n, out.lambda.data() + m);
  }
  return result;
}

LinearProgram domain_program(std::span<const double> cost, const Polytope& domain) {
  if (cost.size() != domain.dimension()) throw std::invalid_argument("cost dimension mismatch");
  LinearProgram lp;
  lp.cost.assign(cost.begin(), cost.end());
  for (std::size_t i = 0; i < domain.rows().size(); ++i)
    lp.add_row(domain.rows()[i], RowTag{RowKind::Domain, i});
  lp.box = domain.box();
  return lp;
}

ValueRange value_range(std::span<const double> cost, const Polytope& domain) {
  LinearProgram lp = domain_program(cost, domain);
  const LpResult lo = solve_lp(lp);
  for (double& v : lp.cost) v = -v;
  const LpResult hi = solve_lp(lp);
  if (!lo.optimal() || !hi.optimal())
    throw LpError("value range requires a nonempty bounded domain");
  return {lo.value, -hi.value};
}

}  // namespace scenopt
