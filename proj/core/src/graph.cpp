#include "pwll/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

#include "pwll/errors.hpp"

namespace pwll {

std::vector<std::vector<Neighbor>> knn_search(const FeatureMatrix& features,
                                              Index k) {
  const Index n = static_cast<Index>(features.rows());
  if (k == 0 || n < k + 1) {
    throw InvalidArgument("knn_search needs 1 <= k < N (k=" +
                          std::to_string(k) + ", N=" + std::to_string(n) + ")");
  }
  if (!features.allFinite()) {
    throw InvalidArgument("features contain non-finite values");
  }

  std::vector<std::vector<Neighbor>> result(n);
  std::vector<std::pair<double, Index>> candidates(n - 1);
  for (Index i = 0; i < n; ++i) {
    Index slot = 0;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      candidates[slot++] = {(features.row(i) - features.row(j)).squaredNorm(),
                            j};
    }
    std::partial_sort(candidates.begin(), candidates.begin() + k,
                      candidates.end());
    auto& row = result[i];
    row.reserve(k);
    for (Index m = 0; m < k; ++m) {
      row.push_back({candidates[m].second, std::sqrt(candidates[m].first)});
    }
  }
  return result;
}

namespace {

bool HasZeroKthDistance(const std::vector<std::vector<Neighbor>>& knn) {
  return std::any_of(knn.begin(), knn.end(), [](const auto& row) {
    return row.back().distance == 0.0;
  });
}

FeatureMatrix JitterDuplicates(const FeatureMatrix& features,
                               const std::vector<std::vector<Neighbor>>& knn) {
  double scale = 0.0;
  for (Eigen::Index c = 0; c < features.cols(); ++c) {
    scale = std::max(scale,
                     features.col(c).maxCoeff() - features.col(c).minCoeff());
  }
  if (scale == 0.0) scale = 1.0;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  FeatureMatrix out = features;
  for (Index i = 0; i < knn.size(); ++i) {
    if (knn[i].front().distance != 0.0) continue;
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      // Uniform in [-1, 1) from the top 53 bits.
      const double unit =
          static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
      out(static_cast<Eigen::Index>(i), c) += 1e-9 * scale * unit;
    }
  }
  return out;
}

}  // namespace

SimilarityGraph build_knn_graph(const FeatureMatrix& features,
                                const GraphOptions& options) {
  const Index k = options.k;
  auto knn = knn_search(features, k);
  if (HasZeroKthDistance(knn)) {
    if (!options.jitter_duplicates) {
      throw DegenerateFeatures(
          "duplicate points give a zero k-th neighbour distance; enable "
          "duplicate jitter or deduplicate the input");
    }
    knn = knn_search(JitterDuplicates(features, knn), k);
    if (HasZeroKthDistance(knn)) {
      throw DegenerateFeatures("duplicate points survive jitter");
    }
  }

  const Index n = static_cast<Index>(features.rows());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * n * k);
  for (Index i = 0; i < n; ++i) {
    const double dk = knn[i].back().distance;
    const double inv = 1.0 / (dk * dk);
    for (const auto& nb : knn[i]) {
      const double half =
          0.5 * std::exp(-4.0 * nb.distance * nb.distance * inv);
      const auto r = static_cast<Eigen::Index>(i);
      const auto c = static_cast<Eigen::Index>(nb.index);
      triplets.emplace_back(r, c, half);
      triplets.emplace_back(c, r, half);
    }
  }
  SparseMatrix w(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  w.setFromTriplets(triplets.begin(), triplets.end());
  w.makeCompressed();
  return SimilarityGraph::FromWeights(std::move(w), k);
}

Index count_components(const SparseMatrix& weights) {
  const Index n = static_cast<Index>(weights.rows());
  std::vector<char> seen(n, 0);
  Index components = 0;
  std::queue<Index> frontier;
  for (Index start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = 1;
    frontier.push(start);
    while (!frontier.empty()) {
      const Index v = frontier.front();
      frontier.pop();
      for (SparseMatrix::InnerIterator it(weights,
                                          static_cast<Eigen::Index>(v));
           it; ++it) {
        const auto u = static_cast<Index>(it.col());
        if (it.value() > 0.0 && !seen[u]) {
          seen[u] = 1;
          frontier.push(u);
        }
      }
    }
  }
  return components;
}

SimilarityGraph SimilarityGraph::FromWeights(SparseMatrix weights, Index k) {
  if (weights.rows() != weights.cols()) {
    throw InvalidArgument("weight matrix must be square");
  }
  if (weights.rows() < 2) {
    throw InvalidArgument("similarity graph needs at least two nodes");
  }
  weights.makeCompressed();
  const SparseMatrix transposed = weights.transpose();
  for (Eigen::Index r = 0; r < weights.outerSize(); ++r) {
    double row_sum = 0.0;
    for (SparseMatrix::InnerIterator it(weights, r); it; ++it) {
      if (!(it.value() >= 0.0) || !std::isfinite(it.value())) {
        throw InvalidArgument("edge weights must be finite and nonnegative");
      }
      if (it.col() == r && it.value() != 0.0) {
        throw InvalidArgument("self-loops are not allowed");
      }
      if (transposed.coeff(r, it.col()) != it.value()) {
        throw InvalidArgument("weight matrix is not exactly symmetric");
      }
      row_sum += it.value();
    }
    if (row_sum <= 0.0) {
      throw InvalidArgument("node " + std::to_string(r) +
                            " has no positive-weight neighbour");
    }
  }
  if (const Index c = count_components(weights); c != 1) {
    throw DisconnectedGraph(c);
  }
  return SimilarityGraph(std::move(weights), k);
}

SimilarityGraph SimilarityGraph::FromEdges(
    Index n,
    const std::vector<std::pair<std::pair<Index, Index>, double>>& edges) {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges.size());
  for (const auto& [ends, w] : edges) {
    const auto [a, b] = ends;
    if (a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    triplets.emplace_back(static_cast<Eigen::Index>(a),
                          static_cast<Eigen::Index>(b), w);
    triplets.emplace_back(static_cast<Eigen::Index>(b),
                          static_cast<Eigen::Index>(a), w);
  }
  SparseMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return FromWeights(std::move(m), 0);
}

Vector SimilarityGraph::degrees() const {
  Vector d(weights_.rows());
  for (Eigen::Index r = 0; r < weights_.outerSize(); ++r) {
    double s = 0.0;
    for (SparseMatrix::InnerIterator it(weights_, r); it; ++it) s += it.value();
    d[r] = s;
  }
  return d;
}

SparseOperator assemble_laplacian(const SimilarityGraph& graph,
                                  const Vector& gamma) {
  const SparseMatrix& w = graph.weights();
  const Eigen::Index n = w.rows();
  const bool uniform = gamma.size() == 0;
  if (!uniform) {
    if (gamma.size() != n) {
      throw InvalidArgument("gamma length does not match the graph");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!(gamma[i] > 0.0) || !std::isfinite(gamma[i])) {
        throw NonPositiveGamma("gamma must be finite and strictly positive (node " +
                               std::to_string(i) + ")");
      }
    }
  }

  SparseMatrix l(n, n);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(w.nonZeros() + n));
  for (Eigen::Index r = 0; r < n; ++r) {
    const double gr = uniform ? 1.0 : gamma[r];
    double degree = 0.0;
    for (SparseMatrix::InnerIterator it(w, r); it; ++it) {
      const double gc = uniform ? 1.0 : gamma[it.col()];
      const double a = gr * gc * it.value();
      degree += a;
      triplets.emplace_back(r, it.col(), -a);
    }
    triplets.emplace_back(r, r, degree);
  }
  l.setFromTriplets(triplets.begin(), triplets.end());
  l.makeCompressed();
  return SparseOperator(std::move(l));
}

}  // namespace pwll
