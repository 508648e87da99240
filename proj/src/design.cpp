#include "robustmedian/design.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "robustmedian/binomial.hpp"

namespace robmed {

namespace {

void check_level(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha_target must lie in (0, 1), got " +
                            std::to_string(alpha));
}

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps < 0.5))
    throw std::domain_error("eps must lie in [0, 1/2), got " +
                            std::to_string(eps));
}

}  // namespace

DesignSpec select_k(std::int64_t n, double alpha_target, double eps,
                    KSelectionRule rule) {
  if (n < 2)
    throw std::domain_error("select_k: n must be >= 2, got " +
                            std::to_string(n));
  check_level(alpha_target);
  check_eps(eps);

  const std::int64_t kmax = n / 2 - 1;
  const double p = (1.0 - eps) / 2.0;

  // alpha* is nondecreasing in k, so scan downward from kmax and stop at
  // the first k with alpha* <= alpha. Each step removes one pmf term from
  // each tail: alpha*(k-1) = alpha*(k) - pmf(k) - pmf(n-k).
  double cur = alpha_star(n, kmax, eps);
  std::int64_t k_below = -1;   // largest k with alpha* <= alpha, if any
  double a_below = 0.0;
  std::int64_t k_above = -1;   // smallest scanned k with alpha* > alpha
  double a_above = 0.0;
  for (std::int64_t k = kmax;; --k) {
    if (cur <= alpha_target) {
      k_below = k;
      a_below = cur;
      break;
    }
    k_above = k;
    a_above = cur;
    if (k == 0) break;
    cur -= binom_pmf(n, k, p) + binom_pmf(n, n - k, p);
  }

  DesignSpec spec;
  spec.n = n;
  spec.alpha_target = alpha_target;
  spec.eps = eps;

  if (rule == KSelectionRule::Conservative) {
    spec.k = (k_below >= 0) ? k_below : 0;
  } else if (k_below < 0) {
    spec.k = 0;  // every admissible level exceeds the target
  } else if (k_above < 0) {
    spec.k = k_below;  // even kmax is at or below the target
  } else {
    const double d_below = std::fabs(a_below - alpha_target);
    const double d_above = std::fabs(a_above - alpha_target);
    // Equidistant -> smaller k (larger coverage).
    spec.k = (d_below <= d_above) ? k_below : k_above;
  }
  // The incremental values drift by at most a few ulps; recompute so the
  // stored level is exactly reproducible from (n, k, eps).
  spec.alpha_achieved = alpha_star(n, spec.k, eps);
  spec.degenerate = (1.0 - alpha_star(n, 0, eps)) < 0.5;
  return spec;
}

RobustInterval build_interval(const Sample& sample, const DesignSpec& spec) {
  if (sample.size() != spec.n)
    throw std::domain_error("build_interval: sample size " +
                            std::to_string(sample.size()) +
                            " does not match design n " +
                            std::to_string(spec.n));
  if (spec.n < 2 * spec.k + 2)
    throw std::domain_error("build_interval: need n >= 2k + 2");
  RobustInterval iv;
  iv.k = spec.k;
  iv.lower = sample.order_statistic(spec.k + 1);
  iv.upper = sample.order_statistic(spec.n - spec.k);
  iv.min_coverage = 1.0 - spec.alpha_achieved;
  return iv;
}

std::int64_t sign_statistic(const Sample& sample, double theta0) {
  std::int64_t t = 0;
  for (double x : sample.values()) {
    if (x - theta0 > 0.0) ++t;
  }
  return t;
}

ContaminationTolerance contamination_tolerance(std::int64_t n, std::int64_t t,
                                               double alpha_target) {
  if (n < 2)
    throw std::domain_error("contamination_tolerance: n must be >= 2");
  if (t < 0 || t > n)
    throw std::domain_error("contamination_tolerance: need 0 <= T <= n");
  check_level(alpha_target);

  const std::int64_t r = std::min(t, n - t);
  ContaminationTolerance result;
  if (r > n / 2 - 1 || alpha_star(n, r, 0.0) >= alpha_target) {
    // The acceptance region contains r even with clean data.
    result.status = ToleranceStatus::NotSignificantEvenClean;
    return result;
  }

  // alpha*(n, r, .) is continuous and strictly increasing in eps, so the
  // root is bracketed once the upper end exceeds the target.
  const double hi_limit = 0.5 - 1e-13;
  if (alpha_star(n, r, hi_limit) < alpha_target) {
    result.status = ToleranceStatus::CappedAtHalf;
    result.value = 0.5;
    return result;
  }
  double lo = 0.0;
  double hi = hi_limit;
  for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (alpha_star(n, r, mid) < alpha_target)
      lo = mid;
    else
      hi = mid;
  }
  result.status = ToleranceStatus::Value;
  result.value = 0.5 * (lo + hi);
  return result;
}

SignTestOutcome robust_sign_test(const Sample& sample, double theta0,
                                 const DesignSpec& spec) {
  if (sample.size() != spec.n)
    throw std::domain_error("robust_sign_test: sample size " +
                            std::to_string(sample.size()) +
                            " does not match design n " +
                            std::to_string(spec.n));
  SignTestOutcome out;
  out.statistic = sign_statistic(sample, theta0);
  out.deviation = std::min(out.statistic, spec.n - out.statistic);
  out.reject = out.statistic <= spec.k || out.statistic >= spec.n - spec.k;
  out.alpha_achieved = spec.alpha_achieved;
  out.tolerance =
      contamination_tolerance(spec.n, out.statistic, spec.alpha_target);
  out.ties_at_theta0 = sample.tie_count_at(theta0);
  return out;
}

double min_coverage(std::int64_t n, std::int64_t k, double eps) {
  return 1.0 - alpha_star(n, k, eps);
}

}  // namespace robmed
