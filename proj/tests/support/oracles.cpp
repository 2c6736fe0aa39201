#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

namespace scenopt::testing {

namespace mp = boost::multiprecision;

namespace {

// v = mantissa * 2^-scale with an integer mantissa.
struct Dyadic {
  mp::cpp_int mantissa;
  unsigned scale;
};

Dyadic dyadic(double v) {
  int exponent = 0;
  const double m = std::frexp(v, &exponent);
  Dyadic d{mp::cpp_int(static_cast<std::int64_t>(std::ldexp(m, 53))), 0};
  int shift = exponent - 53;
  if (shift >= 0) {
    d.mantissa <<= shift;
  } else {
    d.scale = static_cast<unsigned>(-shift);
  }
  return d;
}

// tail * 2^(scale * N) as an integer, with eps = p / 2^scale.
mp::cpp_int scaled_tail(std::uint64_t samples, std::uint64_t dimension, const Dyadic& eps) {
  const mp::cpp_int& p = eps.mantissa;
  const mp::cpp_int q = (mp::cpp_int(1) << eps.scale) - p;
  const std::uint64_t top = std::min(dimension, samples + 1);
  mp::cpp_int sum = 0;
  mp::cpp_int choose = 1;
  for (std::uint64_t i = 0; i < top; ++i) {
    sum += choose * mp::pow(p, static_cast<unsigned>(i)) * mp::pow(q, static_cast<unsigned>(samples - i));
    choose = choose * (samples - i) / (i + 1);
  }
  return sum;
}

}  // namespace

double exact_binomial_tail(std::uint64_t samples, std::uint64_t dimension, double eps) {
  const Dyadic e = dyadic(eps);
  mp::cpp_rational r(scaled_tail(samples, dimension, e));
  r /= mp::cpp_rational(mp::cpp_int(1) << static_cast<unsigned>(e.scale * samples));
  return r.convert_to<double>();
}

long double lgamma_binomial_tail(std::uint64_t samples, std::uint64_t dimension, double eps) {
  if (dimension > samples) return 1.0L;
  if (eps == 0.0) return 1.0L;
  if (eps == 1.0) return 0.0L;
  const long double n = static_cast<long double>(samples);
  const long double le = std::log(static_cast<long double>(eps));
  const long double lq = std::log1p(-static_cast<long double>(eps));
  long double sum = 0.0L;
  for (std::uint64_t i = 0; i < dimension; ++i) {
    const long double k = static_cast<long double>(i);
    sum += std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1) + k * le + (n - k) * lq);
  }
  return sum;
}

std::uint64_t sample_size_scan(double eps, double beta, std::uint64_t dimension, std::uint64_t m) {
  // Exact comparison where ties at the threshold are possible, lgamma beyond.
  constexpr std::uint64_t kExactUpTo = 150;
  const Dyadic e = dyadic(eps);
  const Dyadic b = dyadic(beta);
  for (std::uint64_t n = 1;; ++n) {
    if (n <= kExactUpTo) {
      // m * S / 2^(e.scale n) <= B / 2^b.scale
      const mp::cpp_int lhs = (m * scaled_tail(n, dimension, e)) << b.scale;
      const mp::cpp_int rhs = b.mantissa << static_cast<unsigned>(e.scale * n);
      if (lhs <= rhs) return n;
    } else if (static_cast<long double>(m) * lgamma_binomial_tail(n, dimension, eps) <= beta) {
      return n;
    }
  }
}

namespace {

struct Constraint {
  std::vector<double> a;
  double b;
};

std::vector<Constraint> all_constraints(const LinearProgram& lp) {
  std::vector<Constraint> out;
  for (const auto& r : lp.rows) out.push_back({r.a, r.b});
  if (lp.box) {
    const std::size_t n = lp.dimension();
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> e(n, 0.0);
      e[j] = 1.0;
      out.push_back({e, (*lp.box)[j].hi});
      e[j] = -1.0;
      out.push_back({e, -(*lp.box)[j].lo});
    }
  }
  return out;
}

// Gaussian elimination with partial pivoting; false if singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-10) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return true;
}

}  // namespace

VertexOptimum vertex_enumeration(const LinearProgram& lp) {
  const std::vector<Constraint> cons = all_constraints(lp);
  const std::size_t n = lp.dimension();
  VertexOptimum best;
  if (cons.size() < n) return best;

  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  std::vector<double> x;
  for (;;) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (const std::size_t i : pick) {
      a.push_back(cons[i].a);
      b.push_back(cons[i].b);
    }
    if (solve_square(a, b, x)) {
      bool ok = true;
      for (const auto& c : cons) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += c.a[j] * x[j];
        if (lhs > c.b + 1e-9 * (1.0 + std::abs(c.b))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        double v = 0.0;
        for (std::size_t j = 0; j < n; ++j) v += lp.cost[j] * x[j];
        if (!best.feasible || v < best.value) {
          best.feasible = true;
          best.value = v;
          best.x = x;
        }
      }
    }
    // next combination
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == cons.size() - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

KktResiduals kkt_residuals(const LinearProgram& lp, const LpResult& r) {
  const std::size_t n = lp.dimension();
  KktResiduals k;
  std::vector<double> grad = lp.cost;
  double dual_value = 0.0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& row = lp.rows[i];
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      grad[j] += r.row_duals[i] * row.a[j];
      lhs += row.a[j] * r.x[j];
    }
    k.primal = std::max(k.primal, lhs - row.b);
    k.complementarity = std::max(k.complementarity, std::abs(r.row_duals[i] * (row.b - lhs)));
    k.dual_sign = std::max(k.dual_sign, -r.row_duals[i]);
    dual_value += r.row_duals[i] * row.b;
  }
  if (lp.box) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto [lo, hi] = (*lp.box)[j];
      grad[j] += r.upper_duals[j] - r.lower_duals[j];
      k.primal = std::max({k.primal, r.x[j] - hi, lo - r.x[j]});
      k.complementarity = std::max({k.complementarity, std::abs(r.upper_duals[j] * (hi - r.x[j])),
                                    std::abs(r.lower_duals[j] * (r.x[j] - lo))});
      k.dual_sign = std::max({k.dual_sign, -r.upper_duals[j], -r.lower_duals[j]});
      dual_value += r.upper_duals[j] * hi - r.lower_duals[j] * lo;
    }
  }
  for (const double g : grad) k.stationarity = std::max(k.stationarity, std::abs(g));
  double primal_value = 0.0;
  for (std::size_t j = 0; j < n; ++j) primal_value += lp.cost[j] * r.x[j];
  k.gap = std::abs(primal_value + dual_value);
  return k;
}

LinearProgram random_bounded_lp(std::mt19937_64& rng, std::size_t max_dim, std::size_t max_rows) {
  std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
  std::uniform_int_distribution<std::size_t> row_dist(0, max_rows);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.5, 3.0);
  std::uniform_real_distribution<double> slack(0.0, 1.0);
  std::bernoulli_distribution through_point(1.0 / 3.0);

  LinearProgram lp;
  const std::size_t n = dim_dist(rng);
  std::vector<Interval> box(n);
  std::vector<double> x0(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = width(rng);
    const double centre = unit(rng);
    box[j] = {centre - w, centre + w};
    x0[j] = centre + 0.5 * w * unit(rng);
  }
  lp.box = box;
  for (std::size_t j = 0; j < n; ++j) lp.cost.push_back(unit(rng));
  const bool degenerate = through_point(rng);
  const std::size_t rows = row_dist(rng);
  for (std::size_t i = 0; i < rows; ++i) {
    HalfSpace h;
    double ax = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      h.a.push_back(unit(rng));
      ax += h.a[j] * x0[j];
    }
    h.b = degenerate ? ax : ax + slack(rng);
    lp.add_row(std::move(h), RowTag{RowKind::Scenario, i});
  }
  return lp;
}

double empirical_interval_bruteforce(std::span<const double> gaps, double beta) {
  const std::size_t m = gaps.size();
  const double need = (1.0 - beta) * static_cast<double>(m);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t count = 0;
    double widest = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if ((mask >> k) & 1U) {
        ++count;
        widest = std::max(widest, gaps[k]);
      }
    }
    if (static_cast<double>(count) + 1e-12 >= need) best = std::min(best, widest);
  }
  return best;
}

double example1_violation_quadrature(double x1, double x2, std::size_t grid) {
  std::size_t hits = 0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double d = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
    if (x1 * std::cos(d) + x2 * std::sin(d) - 1.0 > 0.0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(grid);
}

namespace {

// Maximal radius in the box [0,1]^2 along (cos t, sin t).
double box_radius(double t) { return 1.0 / std::max(std::cos(t), std::sin(t)); }

double minimize_over_directions(const std::function<double(double)>& radius) {
  const auto objective = [&](double t) { return -radius(t) * (std::cos(t) + std::sin(t)); };
  const double half_pi = std::numbers::pi / 2.0;
  constexpr int kScan = 96;
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kScan; ++i) {
    const double v = objective(half_pi * i / kScan);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double lo = half_pi * std::max(0, best - 1) / kScan;
  double hi = half_pi * std::min(kScan, best + 1) / kScan;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - r * (hi - lo);
  double b = lo + r * (hi - lo);
  double fa = objective(a);
  double fb = objective(b);
  for (int it = 0; it < 60; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - r * (hi - lo);
      fa = objective(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + r * (hi - lo);
      fb = objective(b);
    }
  }
  return std::min({best_value, fa, fb});
}

std::vector<double> grid_points(std::size_t grid) {
  std::vector<double> d(grid);
  for (std::size_t j = 0; j < grid; ++j)
    d[j] = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
  return d;
}

}  // namespace

double example1_numeric_rcp(double gamma, std::size_t grid) {
  const std::vector<double> d = grid_points(grid);
  return minimize_over_directions([&](double t) {
    double worst = -1.0;
    for (const double dj : d) worst = std::max(worst, std::cos(dj - t));
    const double r = worst > 0.0 ? (1.0 + gamma) / worst : std::numeric_limits<double>::infinity();
    return std::min(r, box_radius(t));
  });
}

double example1_numeric_ccp(double eps, std::size_t grid) {
  const std::vector<double> d = grid_points(grid);
  const auto allowed = static_cast<std::size_t>(std::floor(eps * static_cast<double>(grid)));
  std::vector<double> proj(grid);
  return minimize_over_directions([&](double t) {
    for (std::size_t j = 0; j < grid; ++j) proj[j] = std::cos(d[j] - t);
    if (allowed >= grid) return box_radius(t);
    // (allowed + 1)-th largest projection bounds 1 / radius.
    auto kth = proj.begin() + static_cast<std::ptrdiff_t>(allowed);
    std::nth_element(proj.begin(), kth, proj.end(), std::greater<>());
    const double r = *kth > 0.0 ? 1.0 / *kth : std::numeric_limits<double>::infinity();
    return std::min(r, box_radius(t));
  });
}

}  // namespace scenopt::testing
