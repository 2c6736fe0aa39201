#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

namespace scenopt {

/// No finite sample count satisfies the requested bound (violation level 0
/// with confidence parameter below 1).
class UnachievableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// sum_{i=0}^{min(n, N+1)-1} C(N, i) eps^i (1-eps)^(N-i): the probability that
/// a Binomial(N, eps) count is below n.
///
/// Evaluated in log space from the i = 0 term by the ratio recurrence and
/// summed with Neumaier compensation, which stays accurate for N in the tens
/// of thousands where the binomials overflow.
double binomial_tail(std::uint64_t samples, std::uint64_t dimension, double eps);

/// Smallest N >= 1 with binomial_tail(N, dimension, eps) <= beta.
std::uint64_t sample_size(double eps, double beta, std::uint64_t dimension);

/// Smallest N >= 1 with sum_k binomial_tail(N, dimension, eps_k) <= beta, the
/// bound for a union of subprograms sharing one scenario set.
std::uint64_t sample_size_union(std::span<const double> eps, double beta, std::uint64_t dimension);

}  // namespace scenopt
