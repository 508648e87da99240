// Reproducible Monte Carlo engine: contaminated sampling, coverage
// estimation, and expected-length estimation under point-mass
// contamination.

#pragma once

#include <cstdint>
#include <limits>

#include "robustmedian/design.hpp"
#include "robustmedian/distributions.hpp"
#include "robustmedian/sample.hpp"

namespace robmed {

// Where the contaminating point mass sits. The +/-infinity limits are
// realized at a finite stand-in value (see MCConfig::contamination_value).
enum class Placement { PlusInfinityLimit, MinusInfinityLimit, Point };

struct ContaminationScenario {
  double eps_design = 0.0;   // fraction the procedure is built to withstand
  double delta_actual = 0.0; // fraction truly present in the data
  Placement placement = Placement::PlusInfinityLimit;
  double point = 0.0;        // used when placement == Point
};

struct MCConfig {
  TargetDistribution dist = TargetDistribution::normal();
  ContaminationScenario scenario;
  std::int64_t n = 0;
  double alpha_target = 0.05;
  std::int64_t reps = 8000;
  std::uint64_t seed = 1;
  // Finite stand-in y for the +/-infinity limits. NaN means auto: the
  // distribution location shifted by 10 scale units in the placement
  // direction.
  double contamination_value = std::numeric_limits<double>::quiet_NaN();
  int workers = 1;
};

// The observation value contaminated draws take under this config.
double resolved_contamination_value(const MCConfig& config);

struct MCSummary {
  double mean_length = 0.0;
  double se_length = 0.0;
  double coverage_freq = 0.0;
  double se_coverage = 0.0;
  std::int64_t reps_used = 0;
  // Replications whose interval endpoint landed on a contamination-value
  // observation; those lengths are included at the finite stand-in value.
  std::int64_t infinite_length_count = 0;
};

// One replication's data: each observation independently takes the
// contamination value with probability delta_actual, otherwise an i.i.d.
// draw from the target distribution. Draws depend only on
// (config.seed, rep_index). delta_actual up to 1 is accepted here so
// degenerate all-contaminated samples can be produced in tests; the
// analysis entry points validate delta < 1/2.
Sample sample_contaminated(const MCConfig& config, std::int64_t rep_index);

// Average interval length across replications, with standard error.
// k comes from select_k(n, alpha_target, eps_design).
MCSummary estimate_expected_length(const MCConfig& config);

// Frequency of the coverage event lower <= theta_true < upper, with
// standard error. Lengths are accumulated as well since the intervals are
// already built.
MCSummary estimate_coverage(const MCConfig& config, double theta_true);

}  // namespace robmed
