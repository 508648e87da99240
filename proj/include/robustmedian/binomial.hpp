// Exact Binomial tail machinery in log space.
//
// Everything here is computed from a saddle-point expansion of the log pmf
// (Loader's method: Stirling-error table plus the binomial deviance term),
// so tail probabilities keep full relative accuracy at sample sizes where
// naive pmf products underflow. Plain-real entry points return ordinary
// doubles; log-scale variants are available for values below the double
// range.

#pragma once

#include <cstdint>

namespace robmed {

// Parameters of a Binomial(n, p) variable. Validates n >= 1 and p in [0, 1].
struct BinomialSpec {
  std::int64_t n;
  double p;

  BinomialSpec(std::int64_t n_, double p_);
};

// log P(Z = x) for Z ~ Binomial(n, p). Relative accuracy ~1e-14 for all n.
double binom_log_pmf(std::int64_t n, std::int64_t x, double p);
double binom_pmf(std::int64_t n, std::int64_t x, double p);

// log of sum_{i = lo..hi} P(Z = i); -inf for an empty range. Terms are
// rescaled by the largest log term and accumulated with compensated
// summation, so the result is meaningful even when the sum underflows
// as a plain double.
double binom_log_range_prob(std::int64_t n, double p, std::int64_t lo,
                            std::int64_t hi);

// P(Z <= k). k is clamped: k < 0 -> 0, k >= n -> 1.
double binom_cdf(const BinomialSpec& spec, std::int64_t k);
// log P(Z <= k); usable when the plain value underflows.
double binom_log_cdf(const BinomialSpec& spec, std::int64_t k);
// P(Z >= k). k <= 0 -> 1, k > n -> 0.
double binom_sf(const BinomialSpec& spec, std::int64_t k);

// Classical two-sided sign-test level alpha(k) = 2 P(Z <= k) with
// Z ~ Binomial(n, 1/2). Requires 0 <= k <= floor(n/2) - 1 so the
// acceptance region k < T < n - k is nonempty.
double classical_alpha(std::int64_t n, std::int64_t k);

// Interior probability h(p) = sum_{i=k}^{n-k} C(n,i) p^i (1-p)^(n-i),
// inclusive bounds. Requires 0 <= k <= n - k.
double h_interior(std::int64_t n, std::int64_t k, double p);

// Worst-case two-sided level alpha*(n, k, eps) = 1 - P(k < Z < n - k)
// with Z ~ Binomial(n, (1-eps)/2), computed as the sum of the two closed
// tails P(Z <= k) + P(Z >= n-k) so small levels keep relative accuracy.
// Requires 0 <= eps < 1/2 and a nonempty acceptance region.
double alpha_star(std::int64_t n, std::int64_t k, double eps);

}  // namespace robmed
