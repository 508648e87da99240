// Analysis report assembled for the command line: echoed inputs, the
// interval with its half-open convention, the test decision, contamination
// tolerance, and any warnings. Every numeric field is recomputable from the
// echoed inputs through the design module.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robustmedian/design.hpp"

namespace robmed {

struct AnalysisReport {
  // echoed inputs
  std::int64_t n = 0;
  double alpha_target = 0.05;
  double eps = 0.05;
  std::optional<double> theta0;

  // design and interval
  std::int64_t k = 0;
  double alpha_achieved = 0.0;
  double min_coverage = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  static constexpr const char* kConvention = "[lower, upper)";

  // test outcome, present when theta0 was supplied
  std::optional<std::int64_t> statistic_t;
  std::optional<std::int64_t> r_n;
  std::optional<bool> reject;
  std::optional<ContaminationTolerance> tolerance;

  std::vector<std::string> warnings;

  std::string to_text() const;
  std::string to_csv() const;
  std::string to_json() const;
};

// "0.1234" | "not-significant-even-clean" | "capped-at-1/2"
std::string tolerance_to_string(const ContaminationTolerance& tol);

AnalysisReport analyze_interval(const Sample& sample, double alpha_target,
                                double eps,
                                KSelectionRule rule = KSelectionRule::NearestLevel);

AnalysisReport analyze_test(const Sample& sample, double theta0,
                            double alpha_target, double eps,
                            KSelectionRule rule = KSelectionRule::NearestLevel);

}  // namespace robmed
