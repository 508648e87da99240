#include "robustmedian/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace robmed {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kPi = 3.1415926535897932385;

// Acklam's rational approximation to the standard normal quantile
// (max relative error ~1.15e-9 on its own), followed by one Halley step
// against the erfc-based cdf, which pushes the error to a few ulps.
double acklam(double u) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;

  if (u < plow) {
    const double q = std::sqrt(-2.0 * std::log(u));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (u > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - u));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = u - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
          a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw std::domain_error("normal_quantile: u must lie in (0, 1)");
  if (u == 0.5) return 0.0;
  double x = acklam(u);
  // One Halley refinement: e = Phi(x) - u, step = e / phi(x) adjusted for
  // curvature.
  const double e = normal_cdf(x) - u;
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
  const double t = e / pdf;
  x -= t / (1.0 + 0.5 * x * t);
  return x;
}

TargetDistribution::TargetDistribution(Family family, double mu, double scale)
    : family_(family), mu_(mu), scale_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(mu))
    throw std::domain_error(
        "TargetDistribution: location must be finite and scale positive");
}

TargetDistribution TargetDistribution::normal(double mu, double sigma) {
  return TargetDistribution(Family::Normal, mu, sigma);
}
TargetDistribution TargetDistribution::laplace(double mu, double b) {
  return TargetDistribution(Family::Laplace, mu, b);
}
TargetDistribution TargetDistribution::cauchy(double mu, double gamma) {
  return TargetDistribution(Family::Cauchy, mu, gamma);
}
TargetDistribution TargetDistribution::logistic(double mu, double s) {
  return TargetDistribution(Family::Logistic, mu, s);
}
TargetDistribution TargetDistribution::uniform(double mu, double half_width) {
  return TargetDistribution(Family::Uniform, mu, half_width);
}

TargetDistribution TargetDistribution::from_name(const std::string& name,
                                                 double mu, double scale) {
  if (name == "normal") return normal(mu, scale);
  if (name == "laplace") return laplace(mu, scale);
  if (name == "cauchy") return cauchy(mu, scale);
  if (name == "logistic") return logistic(mu, scale);
  if (name == "uniform") return uniform(mu, scale);
  throw std::domain_error("unknown distribution family: " + name);
}

std::string TargetDistribution::name() const {
  switch (family_) {
    case Family::Normal: return "normal";
    case Family::Laplace: return "laplace";
    case Family::Cauchy: return "cauchy";
    case Family::Logistic: return "logistic";
    case Family::Uniform: return "uniform";
  }
  return "unknown";
}

double TargetDistribution::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0))
    throw std::domain_error("quantile: u must lie in (0, 1)");
  switch (family_) {
    case Family::Normal:
      return mu_ + scale_ * normal_quantile(u);
    case Family::Laplace:
      return u < 0.5 ? mu_ + scale_ * std::log(2.0 * u)
                     : mu_ - scale_ * std::log(2.0 * (1.0 - u));
    case Family::Cauchy:
      return mu_ + scale_ * std::tan(kPi * (u - 0.5));
    case Family::Logistic:
      return mu_ + scale_ * std::log(u / (1.0 - u));
    case Family::Uniform:
      return mu_ + scale_ * (2.0 * u - 1.0);
  }
  throw std::logic_error("unreachable");
}

double TargetDistribution::cdf(double x) const {
  switch (family_) {
    case Family::Normal:
      return normal_cdf((x - mu_) / scale_);
    case Family::Laplace: {
      const double z = (x - mu_) / scale_;
      return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
    }
    case Family::Cauchy:
      return 0.5 + std::atan((x - mu_) / scale_) / kPi;
    case Family::Logistic:
      return 1.0 / (1.0 + std::exp(-(x - mu_) / scale_));
    case Family::Uniform: {
      const double z = (x - mu_) / scale_;
      if (z <= -1.0) return 0.0;
      if (z >= 1.0) return 1.0;
      return 0.5 * (z + 1.0);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace robmed
