#pragma once

#include <string>
#include <vector>

#include "pwll/types.hpp"

namespace pwll {

// Points plus ground truth. true_labels are the classification targets;
// cluster_ids are the exploration units (a class may be a union of clusters).
struct Dataset {
  std::string name;
  FeatureMatrix features;
  std::vector<int> true_labels;
  std::vector<int> cluster_ids;

  Index size() const { return static_cast<Index>(features.rows()); }
  Index dimension() const { return static_cast<Index>(features.cols()); }
  int num_classes() const;
  int num_clusters() const;

  // Throws InvalidArgument unless N >= 2, labels lie in 0..C-1 with every
  // class present, and each cluster sits inside a single class.
  void validate() const;
};

}  // namespace pwll
