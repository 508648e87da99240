#include "robustmedian/asymptotic.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace robmed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_fraction(const char* what, double v) {
  if (!(v >= 0.0 && v < 0.5))
    throw std::domain_error(std::string(what) + " must lie in [0, 1/2), got " +
                            std::to_string(v));
}

}  // namespace

double max_asymptotic_length(const TargetDistribution& dist, double eps,
                             double delta) {
  check_fraction("eps", eps);
  check_fraction("delta", delta);
  if (delta >= (1.0 - eps) / 2.0) return kInf;
  if (eps == 0.0) return 0.0;
  const double denom = 2.0 * (1.0 - delta);
  return dist.quantile((1.0 + eps) / denom) -
         dist.quantile((1.0 - eps) / denom);
}

double length_breakdown(double eps) {
  check_fraction("eps", eps);
  return (1.0 - eps) / 2.0;
}

bool is_length_robust(double eps) {
  check_fraction("eps", eps);
  return eps < 1.0 / 3.0;
}

std::pair<double, double> optimal_limit_bounds(const TargetDistribution& dist,
                                               double eps) {
  check_fraction("eps", eps);
  if (eps == 0.0) return {dist.location(), dist.location()};
  return {dist.quantile((1.0 - eps) / 2.0), dist.quantile((1.0 + eps) / 2.0)};
}

double consistency_distance(const TargetDistribution& dist, double eps,
                            double delta) {
  check_fraction("eps", eps);
  check_fraction("delta", delta);
  if (delta >= (1.0 - eps) / 2.0) return kInf;
  return dist.quantile((1.0 + eps) / (2.0 * (1.0 - delta))) - dist.location();
}

double power_breakdown(double eps) { return length_breakdown(eps); }

bool is_power_robust(double eps) { return is_length_robust(eps); }

double parametric_length(double eps) {
  check_fraction("eps", eps);
  if (eps == 0.0) return 0.0;
  return 2.0 * normal_quantile(1.0 / (2.0 * (1.0 - eps)));
}

}  // namespace robmed
