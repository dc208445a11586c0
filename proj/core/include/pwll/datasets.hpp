#pragma once

#include <cstdint>

#include "pwll/dataset.hpp"
#include "pwll/types.hpp"

namespace pwll {

// Eight Gaussian clusters of 300 points, sigma = 0.17, centred at
// (cos(pi i / 4), sin(pi i / 4)); cluster i has class i mod 2.
Dataset gen_blobs(std::uint64_t seed);

// 65 x 65 lattice on the unit square minus the band |x - 0.3| < half_width.
// Class 0 left of the band, 1 right of it; one cluster per class.
Dataset gen_box(double half_width = 0.01);

// y <- y mod k; cluster ids become the original classes. k = C is the
// identity on labels. Throws KTooLarge when k > C and InvalidArgument
// when k < 2.
Dataset relabel_mod_k(const Dataset& dataset, int k);

struct KdeEstimate {
  Vector values;  // 1 / (d_k + 1e-12)
  Index k = 0;
  double threshold = 0.0;  // nearest-rank percentile of values
};

KdeEstimate knn_kde(const FeatureMatrix& features, Index k,
                    double percentile = 10.0);

}  // namespace pwll
