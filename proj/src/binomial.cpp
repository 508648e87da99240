#include "robustmedian/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace robmed {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// stirlerr(n) = log(n!) - log(sqrt(2*pi*n) * (n/e)^n), exact table for
// n < 16, asymptotic series beyond.
double stirlerr(std::int64_t n) {
  static const double table[16] = {
      0.0,
      0.0810614667953272582,
      0.0413406959554092941,
      0.0276779256849983391,
      0.0207906721037650931,
      0.0166446911898211922,
      0.0138761288230707480,
      0.0118967099458917701,
      0.0104112652619720965,
      0.0092554621827127329,
      0.0083305634333628713,
      0.0075736754879518408,
      0.0069428401072095299,
      0.0064089941880042070,
      0.0059513701127588477,
      0.0055547335519628013,
  };
  if (n < 16) return table[n];
  const double S0 = 1.0 / 12.0;
  const double S1 = 1.0 / 360.0;
  const double S2 = 1.0 / 1260.0;
  const double S3 = 1.0 / 1680.0;
  const double S4 = 1.0 / 1188.0;
  const double n1 = 1.0 / static_cast<double>(n);
  const double n2 = n1 * n1;
  if (n > 500) return (S0 - S1 * n2) * n1;
  if (n > 80) return (S0 - (S1 - S2 * n2) * n2) * n1;
  if (n > 35) return (S0 - (S1 - (S2 - S3 * n2) * n2) * n2) * n1;
  return (S0 - (S1 - (S2 - (S3 - S4 * n2) * n2) * n2) * n2) * n1;
}

// Binomial deviance bd0(x, np) = x log(x/np) + np - x, evaluated by a
// series when x ~ np to avoid cancellation.
double bd0(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    const double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    for (int j = 1;; ++j) {
      ej *= v * v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
  }
  return x * std::log(x / np) + np - x;
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("binomial: p must lie in [0, 1], got " +
                            std::to_string(p));
}

void check_n(std::int64_t n) {
  if (n < 1)
    throw std::domain_error("binomial: n must be >= 1, got " +
                            std::to_string(n));
}

}  // namespace

BinomialSpec::BinomialSpec(std::int64_t n_, double p_) : n(n_), p(p_) {
  check_n(n);
  check_p(p);
}

double binom_log_pmf(std::int64_t n, std::int64_t x, double p) {
  check_n(n);
  check_p(p);
  if (x < 0 || x > n) return kNegInf;
  if (p == 0.0) return x == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return x == n ? 0.0 : kNegInf;
  if (x == 0) return static_cast<double>(n) * std::log1p(-p);
  if (x == n) return static_cast<double>(n) * std::log(p);
  const double nd = static_cast<double>(n);
  const double xd = static_cast<double>(x);
  const double lc = stirlerr(n) - stirlerr(x) - stirlerr(n - x) -
                    bd0(xd, nd * p) - bd0(nd - xd, nd * (1.0 - p));
  return lc + 0.5 * (std::log(nd) - kLog2Pi - std::log(xd) -
                     std::log(nd - xd));
}

double binom_pmf(std::int64_t n, std::int64_t x, double p) {
  return std::exp(binom_log_pmf(n, x, p));
}

double binom_log_range_prob(std::int64_t n, double p, std::int64_t lo,
                            std::int64_t hi) {
  check_n(n);
  check_p(p);
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, n);
  if (lo > hi) return kNegInf;

  // The pmf is unimodal in i, so the largest term sits at the mode
  // clamped into [lo, hi].
  const std::int64_t mode = std::clamp(
      static_cast<std::int64_t>(std::floor((static_cast<double>(n) + 1.0) * p)),
      lo, hi);
  const double lmax = binom_log_pmf(n, mode, p);
  if (lmax == kNegInf) return kNegInf;

  double sum = 0.0;
  double comp = 0.0;  // Kahan compensation
  for (std::int64_t i = lo; i <= hi; ++i) {
    const double term = std::exp(binom_log_pmf(n, i, p) - lmax);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return lmax + std::log(sum);
}

double binom_cdf(const BinomialSpec& spec, std::int64_t k) {
  if (k < 0) return 0.0;
  if (k >= spec.n) return 1.0;
  const std::int64_t mode = static_cast<std::int64_t>(
      std::floor((static_cast<double>(spec.n) + 1.0) * spec.p));
  if (k < mode) {
    return std::exp(binom_log_range_prob(spec.n, spec.p, 0, k));
  }
  // Right tail is the smaller one; complement keeps the result exact to
  // absolute 1e-16, which is full relative accuracy for values near 1.
  return 1.0 - std::exp(binom_log_range_prob(spec.n, spec.p, k + 1, spec.n));
}

double binom_log_cdf(const BinomialSpec& spec, std::int64_t k) {
  if (k < 0) return kNegInf;
  if (k >= spec.n) return 0.0;
  const double cdf = binom_cdf(spec, k);
  if (cdf > 1e-290) return std::log(cdf);
  return binom_log_range_prob(spec.n, spec.p, 0, k);
}

double binom_sf(const BinomialSpec& spec, std::int64_t k) {
  if (k <= 0) return 1.0;
  if (k > spec.n) return 0.0;
  const std::int64_t mode = static_cast<std::int64_t>(
      std::floor((static_cast<double>(spec.n) + 1.0) * spec.p));
  if (k > mode) {
    return std::exp(binom_log_range_prob(spec.n, spec.p, k, spec.n));
  }
  return 1.0 - std::exp(binom_log_range_prob(spec.n, spec.p, 0, k - 1));
}

double classical_alpha(std::int64_t n, std::int64_t k) {
  check_n(n);
  if (k < 0 || k > n / 2 - 1)
    throw std::domain_error(
        "classical_alpha: empty acceptance region, need 0 <= k <= n/2 - 1");
  return 2.0 * binom_cdf(BinomialSpec(n, 0.5), k);
}

double h_interior(std::int64_t n, std::int64_t k, double p) {
  check_n(n);
  check_p(p);
  if (k < 0 || k > n - k)
    throw std::domain_error("h_interior: need 0 <= k <= n - k");
  return std::min(1.0, std::exp(binom_log_range_prob(n, p, k, n - k)));
}

double alpha_star(std::int64_t n, std::int64_t k, double eps) {
  check_n(n);
  if (!(eps >= 0.0 && eps < 0.5))
    throw std::domain_error("alpha_star: eps must lie in [0, 1/2), got " +
                            std::to_string(eps));
  if (k < 0 || k + 1 > n - k - 1)
    throw std::domain_error(
        "alpha_star: empty acceptance region, need 0 <= k <= n/2 - 1");
  const double p = (1.0 - eps) / 2.0;
  const double left = std::exp(binom_log_range_prob(n, p, 0, k));
  const double right = std::exp(binom_log_range_prob(n, p, n - k, n));
  return std::min(1.0, left + right);
}

}  // namespace robmed
