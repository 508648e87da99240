// Exact rational binomial oracle used by the test suites.
//
// Probabilities are computed over a rational success probability
// p = num/den in exact integer arithmetic: every term
// C(n,i) * num^i * (den-num)^(n-i) is an integer over the common
// denominator den^n, so the only rounding happens in the final conversion
// to double. Independent of the log-space implementation path it checks.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace robmed_test {

using BigInt = boost::multiprecision::cpp_int;

// Correctly rounded-to-~1e-18 quotient of two positive big integers.
inline double big_ratio(const BigInt& numerator, const BigInt& denominator) {
  if (numerator == 0) return 0.0;
  const BigInt scaled = (numerator << 64) / denominator;
  return scaled.convert_to<double>() * 0x1.0p-64;
}

// sum_{i=lo..hi} C(n,i) p^i (1-p)^(n-i) with p = num/den, exact.
inline double exact_binom_range(std::int64_t n, std::int64_t num,
                                std::int64_t den, std::int64_t lo,
                                std::int64_t hi) {
  if (n < 1 || den < 1 || num < 0 || num > den)
    throw std::invalid_argument("exact_binom_range: bad parameters");
  if (lo < 0) lo = 0;
  if (hi > n) hi = n;
  if (lo > hi) return 0.0;
  if (num == 0) return lo == 0 ? 1.0 : 0.0;
  if (num == den) return hi == n ? 1.0 : 0.0;

  const BigInt q = den - num;
  // term at i = lo: C(n, lo) * num^lo * q^(n-lo)
  BigInt term = 1;
  for (std::int64_t i = 0; i < lo; ++i) {
    term *= (n - i);
    term /= (i + 1);
  }
  term *= boost::multiprecision::pow(BigInt(num),
                                     static_cast<unsigned>(lo));
  term *= boost::multiprecision::pow(q, static_cast<unsigned>(n - lo));

  BigInt sum = 0;
  for (std::int64_t i = lo;; ++i) {
    sum += term;
    if (i == hi) break;
    // C(n,i+1) num^(i+1) q^(n-i-1) from the previous term, all divisions
    // exact.
    term *= (n - i);
    term /= (i + 1);
    term *= num;
    term /= q;
  }
  const BigInt total = boost::multiprecision::pow(BigInt(den),
                                                  static_cast<unsigned>(n));
  return big_ratio(sum, total);
}

inline double exact_binom_cdf(std::int64_t n, std::int64_t num,
                              std::int64_t den, std::int64_t k) {
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  return exact_binom_range(n, num, den, 0, k);
}

// alpha*(n,k,eps) with eps = eps_num/eps_den: success probability is
// (1 - eps)/2 = (eps_den - eps_num) / (2 eps_den).
inline double exact_alpha_star(std::int64_t n, std::int64_t eps_num,
                               std::int64_t eps_den, std::int64_t k) {
  const std::int64_t num = eps_den - eps_num;
  const std::int64_t den = 2 * eps_den;
  return exact_binom_range(n, num, den, 0, k) +
         exact_binom_range(n, num, den, n - k, n);
}

}  // namespace robmed_test
