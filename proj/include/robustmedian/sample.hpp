// Ordered numeric dataset with tie diagnostics.

#pragma once

#include <cstdint>
#include <vector>

namespace robmed {

// Holds the raw observations and a sorted copy built once at construction.
// Immutable afterwards, so concurrent readers are safe.
class Sample {
 public:
  // Requires at least one finite value; throws std::invalid_argument on an
  // empty vector or non-finite entries.
  explicit Sample(std::vector<double> values);

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& sorted() const { return sorted_; }

  // 1-based order statistic x_(r).
  double order_statistic(std::int64_t r) const;

  // Number of observations exactly equal to theta.
  std::int64_t tie_count_at(double theta) const;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

}  // namespace robmed
