#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "robustmedian/binomial.hpp"
#include "robustmedian/design.hpp"
#include "robustmedian/distributions.hpp"
#include "robustmedian/rng.hpp"

using namespace robmed;

namespace {

// Brute-force selection oracle: evaluate every admissible k.
std::int64_t brute_force_k(std::int64_t n, double alpha, double eps) {
  std::int64_t best = 0;
  double best_diff = std::fabs(alpha_star(n, 0, eps) - alpha);
  for (std::int64_t k = 1; k <= n / 2 - 1; ++k) {
    const double d = std::fabs(alpha_star(n, k, eps) - alpha);
    if (d < best_diff) {
      best = k;
      best_diff = d;
    }
  }
  return best;
}

Sample random_sample(SplitMix64& rng, std::int64_t n,
                     const TargetDistribution& dist) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (auto& x : xs) x = dist.quantile(rng.uniform_open());
  return Sample(std::move(xs));
}

}  // namespace

TEST_CASE("sample basics") {
  Sample s({3.0, 1.0, 2.0, 2.0});
  CHECK(s.size() == 4);
  CHECK(s.sorted() == std::vector<double>{1.0, 2.0, 2.0, 3.0});
  CHECK(s.values() == std::vector<double>{3.0, 1.0, 2.0, 2.0});
  CHECK(s.order_statistic(1) == 1.0);
  CHECK(s.order_statistic(4) == 3.0);
  CHECK(s.tie_count_at(2.0) == 2);
  CHECK(s.tie_count_at(9.0) == 0);
  CHECK_THROWS_AS(Sample(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(Sample({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("sign statistic") {
  CHECK(sign_statistic(Sample({1, 2, 3}), 0.0) == 3);
  const Sample tied({-1, 0, 1});
  CHECK(sign_statistic(tied, 0.0) == 1);  // strict inequality
  CHECK(tied.tie_count_at(0.0) == 1);
}

TEST_CASE("sign statistic is binomial under the null") {
  // Clean Normal(0,1) samples at theta0 = 0: empirical P(T <= 45) over many
  // replications has to match the exact Binomial(100, 1/2) tail.
  const std::int64_t n = 100;
  const int reps = 4000;
  SplitMix64 rng(2024);
  const TargetDistribution normal = TargetDistribution::normal();
  int at_most_45 = 0;
  double mean_t = 0.0;
  for (int r = 0; r < reps; ++r) {
    const std::int64_t t = sign_statistic(random_sample(rng, n, normal), 0.0);
    if (t <= 45) ++at_most_45;
    mean_t += static_cast<double>(t);
  }
  mean_t /= reps;
  const double expect = binom_cdf(BinomialSpec(n, 0.5), 45);
  const double freq = static_cast<double>(at_most_45) / reps;
  const double se = std::sqrt(expect * (1 - expect) / reps);
  CHECK(std::fabs(freq - expect) <= 4 * se);
  CHECK(std::fabs(mean_t - 50.0) <= 4 * 5.0 / std::sqrt(reps));
}

TEST_CASE("select_k reproduces published design points") {
  const DesignSpec a = select_k(20, 0.05, 0.0);
  CHECK(a.k == 5);
  CHECK(1.0 - a.alpha_achieved == doctest::Approx(0.959).epsilon(6e-4));

  const DesignSpec b = select_k(20, 0.05, 0.10);
  CHECK(1.0 - b.alpha_achieved == doctest::Approx(0.938).epsilon(6e-4));

  const DesignSpec c = select_k(100, 0.10, 0.0);
  CHECK(c.k == 41);
  CHECK(1.0 - c.alpha_achieved == doctest::Approx(0.911).epsilon(6e-4));
}

TEST_CASE("select_k matches the brute-force scan") {
  std::mt19937_64 gen(555);
  for (int c = 0; c < 250; ++c) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(gen() % 399);
    const double alpha = 0.01 + (gen() % 30) / 100.0;
    const double eps = (gen() % 45) / 100.0;
    const DesignSpec spec = select_k(n, alpha, eps);
    const std::int64_t expect = brute_force_k(n, alpha, eps);
    if (spec.k != expect) {
      // Accept only exact numerical ties.
      const double d1 = std::fabs(alpha_star(n, spec.k, eps) - alpha);
      const double d2 = std::fabs(alpha_star(n, expect, eps) - alpha);
      CHECK(std::fabs(d1 - d2) <= 1e-12);
    }
    CHECK(spec.alpha_achieved ==
          doctest::Approx(alpha_star(n, spec.k, eps)).epsilon(1e-15));
  }
}

TEST_CASE("conservative rule never exceeds the target") {
  std::mt19937_64 gen(556);
  for (int c = 0; c < 200; ++c) {
    const std::int64_t n = 6 + static_cast<std::int64_t>(gen() % 394);
    const double alpha = 0.02 + (gen() % 25) / 100.0;
    const double eps = (gen() % 40) / 100.0;
    const DesignSpec spec =
        select_k(n, alpha, eps, KSelectionRule::Conservative);
    if (alpha_star(n, 0, eps) <= alpha) {
      CHECK(spec.alpha_achieved <= alpha + 1e-15);
      if (spec.k + 1 <= n / 2 - 1)
        CHECK(alpha_star(n, spec.k + 1, eps) > alpha);
    } else {
      CHECK(spec.k == 0);
    }
  }
}

TEST_CASE("degenerate designs carry a warning flag") {
  CHECK(select_k(2, 0.05, 0.45).degenerate);
  CHECK_FALSE(select_k(100, 0.05, 0.10).degenerate);
  CHECK_THROWS_AS(select_k(1, 0.05, 0.0), std::domain_error);
  CHECK_THROWS_AS(select_k(20, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(select_k(20, 0.05, 0.7), std::domain_error);
}

TEST_CASE("interval construction") {
  Sample s({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  DesignSpec spec;
  spec.n = 10;
  spec.alpha_target = 0.05;
  spec.eps = 0.05;
  spec.k = 2;
  spec.alpha_achieved = alpha_star(10, 2, 0.05);
  const RobustInterval iv = build_interval(s, spec);
  CHECK(iv.lower == 3.0);
  CHECK(iv.upper == 8.0);
  CHECK(iv.min_coverage == doctest::Approx(1.0 - spec.alpha_achieved));
  CHECK(iv.contains(3.0));
  CHECK_FALSE(iv.contains(8.0));  // half-open upper end

  spec.k = 0;
  spec.alpha_achieved = alpha_star(10, 0, 0.05);
  const RobustInterval full = build_interval(s, spec);
  CHECK(full.lower == 1.0);
  CHECK(full.upper == 10.0);

  spec.k = 5;  // n < 2k + 2
  CHECK_THROWS_AS(build_interval(s, spec), std::domain_error);
  spec.k = 2;
  spec.n = 11;
  CHECK_THROWS_AS(build_interval(s, spec), std::domain_error);
}

TEST_CASE("test decision follows the acceptance region") {
  const DesignSpec spec = select_k(20, 0.05, 0.0);
  REQUIRE(spec.k == 5);
  std::vector<double> xs(20, 1.0);
  for (int i = 0; i < 3; ++i) xs[static_cast<std::size_t>(i)] = -1.0;
  const Sample s17(xs);  // T = 17 >= n - k = 15
  CHECK(robust_sign_test(s17, 0.0, spec).reject);

  for (int i = 0; i < 10; ++i) xs[static_cast<std::size_t>(i)] = -1.0;
  const Sample s10(xs);  // T = 10, interior
  const SignTestOutcome accept = robust_sign_test(s10, 0.0, spec);
  CHECK_FALSE(accept.reject);
  CHECK(accept.deviation == 10);
  CHECK(accept.tolerance.status == ToleranceStatus::NotSignificantEvenClean);
}

TEST_CASE("test and interval are exactly dual") {
  SplitMix64 rng(77);
  const TargetDistribution families[3] = {TargetDistribution::normal(),
                                          TargetDistribution::laplace(),
                                          TargetDistribution::cauchy(0, 2)};
  int checked = 0;
  while (checked < 1000) {
    const std::int64_t n =
        4 + static_cast<std::int64_t>(rng.next() % 150);
    const double alpha = 0.01 + (rng.next() % 20) / 100.0;
    const double eps = (rng.next() % 30) / 100.0;
    const DesignSpec spec = select_k(n, alpha, eps);
    const Sample sample =
        random_sample(rng, n, families[rng.next() % 3]);
    const double theta0 =
        sample.sorted().front() +
        (sample.sorted().back() - sample.sorted().front() + 2.0) *
            (rng.uniform_open() * 1.2 - 0.1);
    if (sample.tie_count_at(theta0) > 0) continue;
    const RobustInterval iv = build_interval(sample, spec);
    const SignTestOutcome out = robust_sign_test(sample, theta0, spec);
    CHECK(out.reject == !iv.contains(theta0));
    ++checked;
  }
}

TEST_CASE("contamination tolerance") {
  // dead-center statistic: not significant even with clean data
  CHECK(contamination_tolerance(20, 10, 0.05).status ==
        ToleranceStatus::NotSignificantEvenClean);

  // T = 17 of 20: r_n = 3, the classical test rejects, the root exists
  const ContaminationTolerance tol = contamination_tolerance(20, 17, 0.05);
  REQUIRE(tol.status == ToleranceStatus::Value);
  CHECK(alpha_star(20, 3, tol.value) == doctest::Approx(0.05).epsilon(2e-8));
  CHECK(alpha_star(20, 3, tol.value - 1e-6) < 0.05);
  CHECK(alpha_star(20, 3, tol.value + 1e-6) > 0.05);

  // extreme statistic at large n: rejects for every eps < 1/2
  CHECK(contamination_tolerance(1000, 180, 0.05).status ==
        ToleranceStatus::CappedAtHalf);

  // nonincreasing in r_n at fixed (n, alpha)
  const auto t30 = contamination_tolerance(100, 30, 0.05);
  const auto t35 = contamination_tolerance(100, 35, 0.05);
  REQUIRE(t30.status == ToleranceStatus::Value);
  REQUIRE(t35.status == ToleranceStatus::Value);
  CHECK(t30.value >= t35.value);

  CHECK_THROWS_AS(contamination_tolerance(20, 25, 0.05), std::domain_error);
  CHECK_THROWS_AS(contamination_tolerance(20, 10, 1.5), std::domain_error);
}

TEST_CASE("tolerance boundary brackets the root for generated cases") {
  std::mt19937_64 gen(42001);
  int checked = 0;
  while (checked < 1000) {
    const std::int64_t n = 10 + static_cast<std::int64_t>(gen() % 191);
    const std::int64_t t = static_cast<std::int64_t>(gen() % (n + 1));
    const double alpha = 0.01 + (gen() % 20) / 100.0;
    const ContaminationTolerance tol = contamination_tolerance(n, t, alpha);
    if (tol.status != ToleranceStatus::Value) continue;
    if (tol.value < 2e-6 || tol.value > 0.5 - 2e-6) continue;
    const std::int64_t r = std::min(t, n - t);
    // the monotone test family rejects below tau and accepts above
    CHECK(alpha_star(n, r, tol.value - 1e-6) < alpha);
    CHECK(alpha_star(n, r, tol.value + 1e-6) > alpha);
    ++checked;
  }
}

TEST_CASE("minimum coverage spot values") {
  const DesignSpec k95 = select_k(500, 0.05, 0.0);
  CHECK(min_coverage(500, k95.k, 0.10) == doctest::Approx(0.376).epsilon(2e-3));
  const DesignSpec k90 = select_k(2000, 0.10, 0.0);
  CHECK(min_coverage(2000, k90.k, 0.15) < 0.0005);
  CHECK(min_coverage(100, 40, 0.0) ==
        doctest::Approx(1.0 - classical_alpha(100, 40)).epsilon(1e-13));
}

TEST_CASE("achieved level converges to the target") {
  double prev = 1.0;
  for (std::int64_t n : {1000, 10000, 100000}) {
    const DesignSpec spec = select_k(n, 0.05, 0.10);
    const double drift = std::fabs(spec.alpha_achieved - 0.05);
    CHECK(drift < prev);
    prev = drift;
  }
  CHECK(prev < 1e-3);
}
