// Symmetric unimodal target distributions: cdf and quantile in closed form,
// with a high-accuracy rational approximation (plus one Halley refinement)
// for the normal quantile.

#pragma once

#include <string>

namespace robmed {

// Standard normal cdf via erfc; accurate over the full double range.
double normal_cdf(double z);

// Standard normal quantile; absolute error well below 1e-9 on (0, 1).
// Throws std::domain_error outside (0, 1).
double normal_quantile(double u);

enum class Family { Normal, Laplace, Cauchy, Logistic, Uniform };

class TargetDistribution {
 public:
  static TargetDistribution normal(double mu = 0.0, double sigma = 1.0);
  static TargetDistribution laplace(double mu = 0.0, double b = 1.0);
  static TargetDistribution cauchy(double mu = 0.0, double gamma = 1.0);
  static TargetDistribution logistic(double mu = 0.0, double s = 1.0);
  // Uniform on [mu - half_width, mu + half_width].
  static TargetDistribution uniform(double mu = 0.0, double half_width = 1.0);

  // Family name in lower case: "normal", "laplace", ...
  static TargetDistribution from_name(const std::string& name, double mu,
                                      double scale);

  Family family() const { return family_; }
  double location() const { return mu_; }  // median
  double scale() const { return scale_; }
  std::string name() const;

  // F^{-1}(u); throws std::domain_error unless 0 < u < 1.
  double quantile(double u) const;
  double cdf(double x) const;

 private:
  TargetDistribution(Family family, double mu, double scale);

  Family family_;
  double mu_;
  double scale_;
};

}  // namespace robmed
