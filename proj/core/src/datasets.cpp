#include "pwll/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>

#include "pwll/errors.hpp"
#include "pwll/graph.hpp"
#include "pwll/rng.hpp"
#include "pwll/stats.hpp"

namespace pwll {

int Dataset::num_classes() const {
  if (true_labels.empty()) return 0;
  return *std::max_element(true_labels.begin(), true_labels.end()) + 1;
}

int Dataset::num_clusters() const {
  return static_cast<int>(
      std::set<int>(cluster_ids.begin(), cluster_ids.end()).size());
}

void Dataset::validate() const {
  const Index n = size();
  if (n < 2) throw InvalidArgument("dataset needs at least two points");
  if (true_labels.size() != n || cluster_ids.size() != n) {
    throw InvalidArgument("label and cluster arrays must have one entry per point");
  }
  if (!features.allFinite()) throw InvalidArgument("features must be finite");
  const int c = num_classes();
  std::vector<char> seen(static_cast<Index>(std::max(c, 0)), 0);
  for (int y : true_labels) {
    if (y < 0) throw InvalidArgument("negative class label");
    seen[static_cast<Index>(y)] = 1;
  }
  for (int k = 0; k < c; ++k) {
    if (!seen[static_cast<Index>(k)]) {
      throw InvalidArgument("class " + std::to_string(k) + " has no points");
    }
  }
  std::unordered_map<int, int> cluster_class;
  for (Index i = 0; i < n; ++i) {
    auto [it, inserted] = cluster_class.emplace(cluster_ids[i], true_labels[i]);
    if (!inserted && it->second != true_labels[i]) {
      throw InvalidArgument("cluster " + std::to_string(cluster_ids[i]) +
                            " spans more than one class");
    }
  }
}

Dataset gen_blobs(std::uint64_t seed) {
  constexpr int kClusters = 8;
  constexpr int kPerCluster = 300;
  constexpr double kSigma = 0.17;
  constexpr double kPi = 3.14159265358979323846;

  Dataset d;
  d.name = "blobs";
  d.features.resize(kClusters * kPerCluster, 2);
  d.true_labels.resize(kClusters * kPerCluster);
  d.cluster_ids.resize(kClusters * kPerCluster);
  Rng rng(seed);
  Eigen::Index row = 0;
  for (int c = 0; c < kClusters; ++c) {
    const double mx = std::cos(kPi * c / 4.0);
    const double my = std::sin(kPi * c / 4.0);
    for (int j = 0; j < kPerCluster; ++j, ++row) {
      d.features(row, 0) = mx + kSigma * rng.normal();
      d.features(row, 1) = my + kSigma * rng.normal();
      d.true_labels[static_cast<Index>(row)] = c % 2;
      d.cluster_ids[static_cast<Index>(row)] = c;
    }
  }
  return d;
}

Dataset gen_box(double half_width) {
  if (!(half_width >= 0.0)) throw InvalidArgument("band half-width must be >= 0");
  Dataset d;
  d.name = "box";
  std::vector<std::pair<double, double>> pts;
  for (int j = 0; j <= 64; ++j) {
    for (int i = 0; i <= 64; ++i) {
      const double x = i / 64.0;
      if (std::abs(x - 0.3) < half_width) continue;
      pts.emplace_back(x, j / 64.0);
    }
  }
  d.features.resize(static_cast<Eigen::Index>(pts.size()), 2);
  for (Index r = 0; r < pts.size(); ++r) {
    d.features(static_cast<Eigen::Index>(r), 0) = pts[r].first;
    d.features(static_cast<Eigen::Index>(r), 1) = pts[r].second;
    const int y = pts[r].first < 0.3 ? 0 : 1;
    d.true_labels.push_back(y);
    d.cluster_ids.push_back(y);
  }
  return d;
}

Dataset relabel_mod_k(const Dataset& dataset, int k) {
  const int c = dataset.num_classes();
  if (k > c) throw KTooLarge(k, c);
  if (k < 2) throw InvalidArgument("relabeling needs k >= 2");
  Dataset out = dataset;
  out.name = dataset.name + "-mod" + std::to_string(k);
  out.cluster_ids = dataset.true_labels;
  for (int& y : out.true_labels) y %= k;
  return out;
}

KdeEstimate knn_kde(const FeatureMatrix& features, Index k, double percentile) {
  const auto nbrs = knn_search(features, k);
  KdeEstimate out;
  out.k = k;
  out.values.resize(static_cast<Eigen::Index>(nbrs.size()));
  for (Index i = 0; i < nbrs.size(); ++i) {
    out.values[static_cast<Eigen::Index>(i)] =
        1.0 / (nbrs[i].back().distance + 1e-12);
  }
  out.threshold = nearest_rank_percentile(
      std::vector<double>(out.values.data(),
                          out.values.data() + out.values.size()),
      percentile);
  return out;
}

}  // namespace pwll
