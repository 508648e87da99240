// Finite-sample inference: acceptance-index selection, the contamination-
// robust order-statistic interval for the median, the associated two-sided
// sign test, and the contamination tolerance of a rejection.

#pragma once

#include <cstdint>

#include "robustmedian/sample.hpp"

namespace robmed {

// How the acceptance index k is picked for a target level.
//   NearestLevel:  k minimizing |alpha*(n, k, eps) - alpha|, ties broken
//                  toward the smaller k (larger coverage).
//   Conservative:  largest k with alpha*(n, k, eps) <= alpha, so the
//                  achieved level never exceeds the target.
enum class KSelectionRule { NearestLevel, Conservative };

struct DesignSpec {
  std::int64_t n = 0;
  double alpha_target = 0.05;
  double eps = 0.0;           // design contamination fraction
  std::int64_t k = 0;         // acceptance region is k < T < n - k
  double alpha_achieved = 0.0;  // alpha*(n, k, eps)
  bool degenerate = false;    // even k = 0 gives coverage below 1/2
};

// Requires n >= 2, 0 < alpha_target < 1, 0 <= eps < 1/2.
DesignSpec select_k(std::int64_t n, double alpha_target, double eps,
                    KSelectionRule rule = KSelectionRule::NearestLevel);

// Half-open interval [lower, upper) with exact minimum coverage over the
// eps-contamination neighborhood of any continuous target distribution.
struct RobustInterval {
  double lower = 0.0;  // x_(k+1)
  double upper = 0.0;  // x_(n-k)
  std::int64_t k = 0;
  double min_coverage = 0.0;  // 1 - alpha*(n, k, eps)

  bool contains(double theta) const { return lower <= theta && theta < upper; }
};

// lower = x_(k+1), upper = x_(n-k). Requires sample.size() == spec.n and
// n >= 2k + 2.
RobustInterval build_interval(const Sample& sample, const DesignSpec& spec);

// T = #{ x_i : x_i - theta0 > 0 }; ties count as non-positive. Callers that
// care about ties read sample.tie_count_at(theta0).
std::int64_t sign_statistic(const Sample& sample, double theta0);

enum class ToleranceStatus {
  Value,                    // tau solved on [0, 1/2)
  NotSignificantEvenClean,  // classical test would not reject anyway
  CappedAtHalf,             // test rejects for every eps < 1/2
};

struct ContaminationTolerance {
  ToleranceStatus status = ToleranceStatus::NotSignificantEvenClean;
  double value = 0.0;  // tau_alpha, meaningful when status == Value
};

// Largest design contamination at which the eps-robust level-alpha sign test
// still rejects, i.e. the root of alpha*(n, min(T, n-T), eps) = alpha.
// Bisection to absolute tolerance 1e-10 (at most 200 iterations).
ContaminationTolerance contamination_tolerance(std::int64_t n, std::int64_t t,
                                               double alpha_target);

struct SignTestOutcome {
  std::int64_t statistic = 0;  // T
  std::int64_t deviation = 0;  // r_n = min(T, n - T)
  bool reject = false;         // T <= k or T >= n - k
  double alpha_achieved = 0.0;
  ContaminationTolerance tolerance;
  std::int64_t ties_at_theta0 = 0;
};

SignTestOutcome robust_sign_test(const Sample& sample, double theta0,
                                 const DesignSpec& spec);

// Exact infimum of coverage over the eps-neighborhood: 1 - alpha*(n, k, eps).
double min_coverage(std::int64_t n, std::int64_t k, double eps);

}  // namespace robmed
