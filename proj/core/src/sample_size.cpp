#include "scenopt/sample_size.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

namespace scenopt {

namespace {

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    std::ostringstream msg;
    msg << "violation level must lie in [0, 1], got " << eps;
    throw std::invalid_argument(msg.str());
  }
}

// Minimal N >= 1 with tail(N) <= beta for a tail that is non-increasing in N.
std::uint64_t invert(const std::function<double(std::uint64_t)>& tail, double beta) {
  if (tail(1) <= beta) return 1;
  std::uint64_t lo = 1;  // tail(lo) > beta
  std::uint64_t hi = 2;
  while (tail(hi) > beta) {
    lo = hi;
    if (hi > (std::uint64_t{1} << 62)) throw UnachievableError("sample size search overflowed");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (tail(mid) <= beta) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // Floating point may break monotonicity right at the threshold.
  while (hi > 1 && tail(hi - 1) <= beta) --hi;
  while (tail(hi) > beta) ++hi;
  return hi;
}

}  // namespace

double binomial_tail(std::uint64_t samples, std::uint64_t dimension, double eps) {
  check_eps(eps);
  if (samples == 0) throw std::invalid_argument("binomial_tail needs N >= 1");
  if (dimension == 0) throw std::invalid_argument("binomial_tail needs n >= 1");
  const std::uint64_t terms = std::min(dimension, samples + 1);
  if (terms == samples + 1) return 1.0;  // the full binomial expansion
  if (eps == 0.0) return 1.0;
  if (eps == 1.0) return 0.0;  // only i = N contributes and N >= terms

  const double n = static_cast<double>(samples);
  const double first = std::pow(1.0 - eps, n);
  if (first >= 1e-250) {
    // Terms are probabilities, so the direct recurrence cannot overflow.
    const double odds = eps / (1.0 - eps);
    double term = first;
    double sum = first;
    double carry = 0.0;
    for (std::uint64_t i = 1; i < terms; ++i) {
      const double k = static_cast<double>(i);
      term = term * (n - k + 1.0) / k * odds;
      const double t = sum + term;
      carry += sum >= term ? (sum - t) + term : (term - t) + sum;
      sum = t;
    }
    return std::clamp(sum + carry, 0.0, 1.0);
  }

  const double log_odds = std::log(eps) - std::log1p(-eps);
  std::vector<double> logs(terms);
  logs[0] = n * std::log1p(-eps);
  for (std::uint64_t i = 1; i < terms; ++i) {
    const double k = static_cast<double>(i);
    logs[i] = logs[i - 1] + std::log((n - k + 1.0) / k) + log_odds;
  }
  const double peak = *std::max_element(logs.begin(), logs.end());
  if (peak == -std::numeric_limits<double>::infinity()) return 0.0;

  double sum = 0.0;
  double carry = 0.0;
  for (const double l : logs) {
    const double term = std::exp(l - peak);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return std::clamp(std::exp(peak) * (sum + carry), 0.0, 1.0);
}

std::uint64_t sample_size(double eps, double beta, std::uint64_t dimension) {
  const double level[] = {eps};
  return sample_size_union(level, beta, dimension);
}

std::uint64_t sample_size_union(std::span<const double> eps, double beta, std::uint64_t dimension) {
  if (eps.empty()) throw std::invalid_argument("need at least one violation level");
  if (dimension == 0) throw std::invalid_argument("dimension must be at least 1");
  if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in (0, 1]");
  for (const double e : eps) check_eps(e);
  if (beta >= 1.0) return 1;
  if (std::any_of(eps.begin(), eps.end(), [](double e) { return e == 0.0; }))
    throw UnachievableError("violation level 0 admits no finite sample size for beta < 1");

  // Equal levels are evaluated once and weighted by multiplicity.
  std::map<double, double> groups;
  for (const double e : eps) groups[e] += 1.0;
  const auto tail = [&](std::uint64_t samples) {
    double total = 0.0;
    for (const auto& [e, count] : groups) total += count * binomial_tail(samples, dimension, e);
    return total;
  };
  return invert(tail, beta);
}

}  // namespace scenopt
