#include "pwll/stats.hpp"

#include <algorithm>
#include <cmath>

#include "pwll/errors.hpp"

namespace pwll {

double nearest_rank_percentile(std::vector<double> values, double p) {
  if (values.empty()) throw InvalidArgument("percentile of empty set");
  if (!(p >= 0.0 && p <= 100.0)) {
    throw InvalidArgument("percentile must lie in [0, 100]");
  }
  const double n = static_cast<double>(values.size());
  auto rank = static_cast<Index>(std::ceil(p * n / 100.0));
  rank = std::clamp<Index>(rank, 1, values.size());
  auto nth = values.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(values.begin(), nth, values.end());
  return *nth;
}

}  // namespace pwll
