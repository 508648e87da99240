#include "robustmedian/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robmed {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("Sample: need at least one observation");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw std::invalid_argument("Sample: non-finite value at position " +
                                  std::to_string(i + 1));
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

double Sample::order_statistic(std::int64_t r) const {
  if (r < 1 || r > size())
    throw std::out_of_range("Sample: order statistic index " +
                            std::to_string(r) + " outside 1.." +
                            std::to_string(size()));
  return sorted_[static_cast<std::size_t>(r - 1)];
}

std::int64_t Sample::tie_count_at(double theta) const {
  const auto range = std::equal_range(sorted_.begin(), sorted_.end(), theta);
  return static_cast<std::int64_t>(range.second - range.first);
}

}  // namespace robmed
