#pragma once

#include <vector>

#include "pwll/types.hpp"

namespace pwll {

// Nearest-rank percentile: the ceil(p/100 * n)-th smallest value (the
// minimum for p = 0). Throws InvalidArgument on empty input or p outside
// [0, 100].
double nearest_rank_percentile(std::vector<double> values, double p);

}  // namespace pwll
