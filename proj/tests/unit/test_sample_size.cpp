#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "scenopt/sample_size.hpp"

using namespace scenopt;

TEST_CASE("binomial tail small cases") {
  CHECK(binomial_tail(2, 1, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(binomial_tail(10, 2, 0.1) == doctest::Approx(testing::exact_binomial_tail(10, 2, 0.1)).epsilon(1e-13));
  CHECK(testing::exact_binomial_tail(10, 2, 0.1) == doctest::Approx(0.7360989291).epsilon(1e-10));
  CHECK(binomial_tail(3, 10, 0.4) == 1.0);  // truncated sum covers every outcome
  CHECK(binomial_tail(5, 2, 0.0) == 1.0);
  CHECK(binomial_tail(5, 2, 1.0) == 0.0);
}

TEST_CASE("two-term closed form for n = 2") {
  for (const double eps : {0.01, 0.1, 0.3}) {
    for (const std::uint64_t n : {1ULL, 2ULL, 60ULL, 500ULL}) {
      const double closed = std::pow(1 - eps, n) + n * eps * std::pow(1 - eps, n - 1.0);
      CHECK(std::abs(binomial_tail(n, 2, eps) - closed) <= 1e-12);
    }
  }
}

TEST_CASE("log-space tail agrees with exact rational summation") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (const std::uint64_t dim : {1ULL, 2ULL, 5ULL, 17ULL}) {
      for (const double eps : {1e-3, 0.05, 0.25, 0.5, 0.9}) {
        const double exact = testing::exact_binomial_tail(n, dim, eps);
        const double got = binomial_tail(n, dim, eps);
        INFO("N=" << n << " n=" << dim << " eps=" << eps);
        if (exact > 1e-300) CHECK(std::abs(got - exact) <= 1e-10 * exact);
      }
    }
  }
}

TEST_CASE("sample size examples") {
  CHECK(sample_size(0.1, 0.01, 2) == 64);
  CHECK(testing::sample_size_scan(0.1, 0.01, 2) == 64);
  CHECK(sample_size(0.3, 1.0, 7) == 1);
  CHECK_THROWS_AS(sample_size(0.0, 0.5, 2), UnachievableError);
  CHECK(sample_size(0.0, 1.0, 2) == 1);
  CHECK_THROWS_AS(sample_size(1.5, 0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(sample_size(0.5, 0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(sample_size(0.5, 0.5, 0), std::invalid_argument);
}

TEST_CASE("fifty-five dimensional case") {
  const std::uint64_t n = sample_size(3.57e-3, 0.002, 55);
  CHECK(n == testing::sample_size_scan(3.57e-3, 0.002, 55));
  CHECK(n == 22056);
  CHECK(binomial_tail(n, 55, 3.57e-3) <= 0.002);
  CHECK(binomial_tail(n - 1, 55, 3.57e-3) > 0.002);
  const std::vector<double> five(5, 3.57e-3);
  CHECK(sample_size_union(five, 0.01, 55) == n);
}

TEST_CASE("minimality against the linear scan") {
  for (const double eps : {0.5, 0.2, 0.05, 0.01}) {
    for (const double beta : {0.5, 0.1, 1e-3, 1e-8}) {
      for (const std::uint64_t dim : {1ULL, 2ULL, 6ULL, 20ULL}) {
        const std::uint64_t got = sample_size(eps, beta, dim);
        INFO("eps=" << eps << " beta=" << beta << " n=" << dim);
        CHECK(got == testing::sample_size_scan(eps, beta, dim));
        CHECK(binomial_tail(got, dim, eps) <= beta);
        if (got > 1) CHECK(binomial_tail(got - 1, dim, eps) > beta);
      }
    }
  }
}

TEST_CASE("monotonicity on a grid") {
  const std::vector<double> eps{0.02, 0.05, 0.1, 0.2, 0.4};
  const std::vector<double> beta{1e-6, 1e-3, 0.01, 0.1};
  const std::vector<std::uint64_t> dims{1, 2, 5, 10, 30};
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t j = 0; j < beta.size(); ++j) {
      for (std::size_t k = 0; k < dims.size(); ++k) {
        const auto v = sample_size(eps[i], beta[j], dims[k]);
        if (i + 1 < eps.size()) CHECK(sample_size(eps[i + 1], beta[j], dims[k]) <= v);
        if (j + 1 < beta.size()) CHECK(sample_size(eps[i], beta[j + 1], dims[k]) <= v);
        if (k + 1 < dims.size()) CHECK(sample_size(eps[i], beta[j], dims[k + 1]) >= v);
      }
    }
  }
}

TEST_CASE("union bound") {
  SUBCASE("single member reduces to the plain bound") {
    const std::vector<double> one{0.07};
    CHECK(sample_size_union(one, 0.01, 4) == sample_size(0.07, 0.01, 4));
  }
  SUBCASE("equal levels divide beta") {
    for (const std::size_t m : {2, 3, 8, 32}) {
      const std::vector<double> eps(m, 0.05);
      CHECK(sample_size_union(eps, 0.01, 3) == sample_size(0.05, 0.01 / static_cast<double>(m), 3));
    }
  }
  SUBCASE("never below the hardest member") {
    const std::vector<double> eps{0.2, 0.05, 0.1};
    std::uint64_t worst = 0;
    for (const double e : eps) worst = std::max(worst, sample_size(e, 0.01, 3));
    const std::uint64_t got = sample_size_union(eps, 0.01, 3);
    CHECK(got >= worst);
    double total = 0.0;
    for (const double e : eps) total += binomial_tail(got, 3, e);
    CHECK(total <= 0.01);
    total = 0.0;
    for (const double e : eps) total += binomial_tail(got - 1, 3, e);
    CHECK(total > 0.01);
  }
  SUBCASE("zero level is unachievable") {
    const std::vector<double> eps{0.1, 0.0};
    CHECK_THROWS_AS(sample_size_union(eps, 0.01, 2), UnachievableError);
  }
  SUBCASE("empty vector is rejected") {
    CHECK_THROWS_AS(sample_size_union(std::vector<double>{}, 0.01, 2), std::invalid_argument);
  }
}
