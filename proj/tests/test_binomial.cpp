#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "robustmedian/binomial.hpp"
#include "support/exact_binomial.hpp"

using namespace robmed;
using robmed_test::exact_binom_cdf;
using robmed_test::exact_binom_range;

TEST_CASE("cdf at tiny n matches enumeration") {
  // {TT, TH, HT} of the four equally likely outcomes
  CHECK(binom_cdf(BinomialSpec(2, 0.5), 1) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(binom_cdf(BinomialSpec(2, 0.5), -1) == 0.0);
  CHECK(binom_cdf(BinomialSpec(2, 0.5), 2) == 1.0);
}

TEST_CASE("frozen exact value at n=20") {
  // sum_{i<=5} C(20,i) / 2^20 = 21700/1048576
  CHECK(binom_cdf(BinomialSpec(20, 0.5), 5) ==
        doctest::Approx(0.020694732666015625).epsilon(1e-13));
}

TEST_CASE("extreme left tail stays in the right order of magnitude") {
  // 0.55^2000 is far below the double range: the plain value can only be
  // 0, but the log-scale variant carries the full answer.
  const BinomialSpec spec(2000, 0.45);
  const double plain = binom_cdf(spec, 0);
  CHECK(plain >= 0.0);
  CHECK(plain <= 5e-324);
  const double expected_log = 2000.0 * std::log1p(-0.45);
  CHECK(binom_log_cdf(spec, 0) ==
        doctest::Approx(expected_log).epsilon(1e-12));

  // At n=1200 the value is subnormal but representable; no underflow to
  // zero or garbage.
  const double sub = binom_cdf(BinomialSpec(1200, 0.45), 0);
  CHECK(sub > 0.0);
  CHECK(std::log(sub) == doctest::Approx(1200.0 * std::log1p(-0.45)).epsilon(1e-3));
}

TEST_CASE("cdf agrees with the exact rational oracle") {
  std::mt19937_64 gen(20240517);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 500);
  std::uniform_int_distribution<std::int64_t> p_idx(1, 39);  // p = idx/40
  int cases = 0;
  while (cases < 1200) {
    const std::int64_t n = n_dist(gen);
    const std::int64_t num = p_idx(gen);
    std::uniform_int_distribution<std::int64_t> k_dist(0, n);
    const std::int64_t k = k_dist(gen);
    const double expected = exact_binom_cdf(n, num, 40, k);
    const double got =
        binom_cdf(BinomialSpec(n, static_cast<double>(num) / 40.0), k);
    if (expected > 0.0) {
      CHECK(std::fabs(got - expected) / expected <= 1e-10);
    } else {
      CHECK(got <= 1e-300);
    }
    ++cases;
  }
}

TEST_CASE("complement identity") {
  std::mt19937_64 gen(7);
  for (int c = 0; c < 300; ++c) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 2000);
    const double p = (static_cast<double>(gen() % 999) + 1.0) / 1000.0;
    const std::int64_t k = static_cast<std::int64_t>(gen() % (n + 1));
    const BinomialSpec spec(n, p);
    CHECK(binom_cdf(spec, k) + binom_sf(spec, k + 1) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("classical level examples") {
  // 2 * 21700/2^20
  CHECK(classical_alpha(20, 5) ==
        doctest::Approx(0.04138946533203125).epsilon(1e-13));
  CHECK(1.0 - classical_alpha(20, 5) == doctest::Approx(0.959).epsilon(6e-4));
  CHECK(1.0 - classical_alpha(100, 40) == doctest::Approx(0.943).epsilon(6e-4));
  CHECK(classical_alpha(2, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(classical_alpha(10, 5), std::domain_error);
  CHECK_THROWS_AS(classical_alpha(10, -1), std::domain_error);
}

TEST_CASE("interior probability examples") {
  CHECK(h_interior(2, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(h_interior(10, 3, 0.3) ==
        doctest::Approx(h_interior(10, 3, 0.7)).epsilon(1e-13));
  CHECK_THROWS_AS(h_interior(10, 6, 0.5), std::domain_error);

  // Nondecreasing on p in [0, 1/2] for every k <= 5 at n = 20.
  for (std::int64_t k = 0; k <= 5; ++k) {
    double prev = -1.0;
    for (int i = 1; i <= 10; ++i) {
      const double p = 0.05 * i;
      const double h = h_interior(20, k, p);
      CHECK(h >= prev - 1e-13);
      prev = h;
    }
  }
}

TEST_CASE("interior symmetry against the oracle grid") {
  std::mt19937_64 gen(99);
  for (int c = 0; c < 400; ++c) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 200);
    const std::int64_t k = static_cast<std::int64_t>(gen() % (n / 2 + 1));
    const int pi = 1 + static_cast<int>(gen() % 99);
    const double p = pi / 100.0;
    const double a = h_interior(n, k, p);
    const double b = h_interior(n, k, 1.0 - p);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    const double exact = exact_binom_range(n, pi, 100, k, n - k);
    CHECK(a == doctest::Approx(exact).epsilon(1e-10));
  }
}

TEST_CASE("worst-case level examples") {
  CHECK(1.0 - alpha_star(20, 5, 0.05) == doctest::Approx(0.954).epsilon(6e-4));
  CHECK(alpha_star(100, 40, 0.10) == doctest::Approx(0.185).epsilon(3e-3));
  CHECK(1.0 - alpha_star(100, 40, 0.10) ==
        doctest::Approx(0.815).epsilon(7e-4));
  // eps = 0 reduces to the classical level
  for (std::int64_t n : {10, 21, 100, 555}) {
    for (std::int64_t k : {0, 2, 4}) {
      CHECK(alpha_star(n, k, 0.0) ==
            doctest::Approx(classical_alpha(n, k)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(alpha_star(20, 5, 0.5), std::domain_error);
  CHECK_THROWS_AS(alpha_star(20, 5, -0.01), std::domain_error);
  CHECK_THROWS_AS(alpha_star(20, 10, 0.1), std::domain_error);
}

TEST_CASE("alpha_star monotone in eps and in k") {
  std::mt19937_64 gen(321);
  for (int c = 0; c < 400; ++c) {
    const std::int64_t n = 4 + static_cast<std::int64_t>(gen() % 400);
    const std::int64_t kmax = n / 2 - 1;
    const std::int64_t k = static_cast<std::int64_t>(gen() % (kmax + 1));
    const double e1 = (static_cast<double>(gen() % 490)) / 1000.0;
    const double e2 = e1 + (0.499 - e1) * 0.5;
    CHECK(alpha_star(n, k, e2) >= alpha_star(n, k, e1) - 1e-13);
    if (k + 1 <= kmax) {
      CHECK(alpha_star(n, k + 1, e1) >= alpha_star(n, k, e1) - 1e-13);
    }
  }
}

TEST_CASE("pmf sums to one") {
  for (std::int64_t n : {1, 17, 1000, 10000}) {
    const double total =
        std::exp(binom_log_range_prob(n, 0.37, 0, n));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(BinomialSpec(0, 0.5), std::domain_error);
  CHECK_THROWS_AS(BinomialSpec(10, -0.1), std::domain_error);
  CHECK_THROWS_AS(BinomialSpec(10, 1.1), std::domain_error);
  CHECK_THROWS_AS(binom_log_pmf(10, 3, 2.0), std::domain_error);
}
