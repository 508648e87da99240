#include "robustmedian/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "robustmedian/rng.hpp"

namespace robmed {

namespace {

void check_config(const MCConfig& config, bool analysis) {
  if (config.n < 2) throw std::domain_error("mc: n must be >= 2");
  if (config.reps < 1) throw std::domain_error("mc: reps must be >= 1");
  const double d = config.scenario.delta_actual;
  if (analysis) {
    if (!(d >= 0.0 && d < 0.5))
      throw std::domain_error("mc: delta_actual must lie in [0, 1/2)");
  } else if (!(d >= 0.0 && d <= 1.0)) {
    throw std::domain_error("mc: delta_actual must lie in [0, 1]");
  }
  if (!(config.scenario.eps_design >= 0.0 && config.scenario.eps_design < 0.5))
    throw std::domain_error("mc: eps_design must lie in [0, 1/2)");
}

// Kahan-compensated sum in index order; deterministic regardless of how
// the per-replication values were produced.
double compensated_sum(const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

void fill_observations(const MCConfig& config, std::int64_t rep_index,
                       double cv, std::vector<double>& out) {
  SplitMix64 rng(substream_seed(config.seed, static_cast<std::uint64_t>(rep_index)));
  const double delta = config.scenario.delta_actual;
  out.resize(static_cast<std::size_t>(config.n));
  for (auto& x : out) {
    if (rng.uniform_open() < delta)
      x = cv;
    else
      x = config.dist.quantile(rng.uniform_open());
  }
}

template <typename PerRep>
void run_replications(const MCConfig& config, PerRep per_rep) {
  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    std::vector<double> buf;
    for (std::int64_t r = 0; r < config.reps; ++r) per_rep(r, buf);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::vector<double> buf;
      for (std::int64_t r = w; r < config.reps; r += workers) per_rep(r, buf);
    });
  }
  for (auto& t : pool) t.join();
}

struct Accumulated {
  double mean = 0.0;
  double se = 0.0;
};

Accumulated summarize(const std::vector<double>& xs) {
  const auto n = static_cast<double>(xs.size());
  Accumulated a;
  a.mean = compensated_sum(xs) / n;
  if (xs.size() > 1) {
    std::vector<double> sq(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double d = xs[i] - a.mean;
      sq[i] = d * d;
    }
    const double var = compensated_sum(sq) / (n - 1.0);
    a.se = std::sqrt(var / n);
  }
  return a;
}

}  // namespace

double resolved_contamination_value(const MCConfig& config) {
  if (config.scenario.placement == Placement::Point)
    return config.scenario.point;
  const double cv = config.contamination_value;
  if (std::isfinite(cv)) return cv;
  const double off = 10.0 * config.dist.scale();
  return config.scenario.placement == Placement::PlusInfinityLimit
             ? config.dist.location() + off
             : config.dist.location() - off;
}

Sample sample_contaminated(const MCConfig& config, std::int64_t rep_index) {
  check_config(config, /*analysis=*/false);
  std::vector<double> obs;
  fill_observations(config, rep_index, resolved_contamination_value(config),
                    obs);
  return Sample(std::move(obs));
}

namespace {

MCSummary run_intervals(const MCConfig& config, bool with_coverage,
                        double theta_true) {
  check_config(config, /*analysis=*/true);
  const DesignSpec spec =
      select_k(config.n, config.alpha_target, config.scenario.eps_design);
  const double cv = resolved_contamination_value(config);

  std::vector<double> lengths(static_cast<std::size_t>(config.reps));
  std::vector<double> covered(static_cast<std::size_t>(config.reps), 0.0);
  std::vector<double> endpoint_hits(static_cast<std::size_t>(config.reps), 0.0);

  run_replications(config, [&](std::int64_t r, std::vector<double>& buf) {
    fill_observations(config, r, cv, buf);
    // Only the two order statistics are needed per replication.
    const auto kLow = static_cast<std::ptrdiff_t>(spec.k);
    const auto kHigh = static_cast<std::ptrdiff_t>(config.n - spec.k - 1);
    std::nth_element(buf.begin(), buf.begin() + kLow, buf.end());
    const double lower = buf[static_cast<std::size_t>(kLow)];
    std::nth_element(buf.begin() + kLow + 1, buf.begin() + kHigh, buf.end());
    const double upper = buf[static_cast<std::size_t>(kHigh)];
    const auto i = static_cast<std::size_t>(r);
    lengths[i] = upper - lower;
    if (upper == cv || lower == cv) endpoint_hits[i] = 1.0;
    if (with_coverage && lower <= theta_true && theta_true < upper)
      covered[i] = 1.0;
  });

  MCSummary summary;
  summary.reps_used = config.reps;
  const Accumulated len = summarize(lengths);
  summary.mean_length = len.mean;
  summary.se_length = len.se;
  summary.infinite_length_count = static_cast<std::int64_t>(
      std::llround(compensated_sum(endpoint_hits)));
  if (with_coverage) {
    const double freq =
        compensated_sum(covered) / static_cast<double>(config.reps);
    summary.coverage_freq = freq;
    summary.se_coverage =
        std::sqrt(freq * (1.0 - freq) / static_cast<double>(config.reps));
  }
  return summary;
}

}  // namespace

MCSummary estimate_expected_length(const MCConfig& config) {
  return run_intervals(config, /*with_coverage=*/false, 0.0);
}

MCSummary estimate_coverage(const MCConfig& config, double theta_true) {
  return run_intervals(config, /*with_coverage=*/true, theta_true);
}

}  // namespace robmed
