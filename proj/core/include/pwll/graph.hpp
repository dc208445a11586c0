#pragma once

#include <utility>
#include <vector>

#include "pwll/types.hpp"

namespace pwll {

struct Neighbor {
  Index index;
  double distance;
};

// Exact Euclidean k-nearest neighbours of every row, excluding the row
// itself. Each list is sorted by (distance, index) so ties resolve to the
// lowest index.
std::vector<std::vector<Neighbor>> knn_search(const FeatureMatrix& features,
                                              Index k);

struct GraphOptions {
  Index k = 10;
  // When set, coincident points that would give a zero k-th neighbour
  // distance are perturbed by a seeded 1e-9 * (feature scale) jitter
  // instead of raising DegenerateFeatures.
  bool jitter_duplicates = false;
};

// Symmetric, nonnegative, zero-diagonal weight matrix over a connected node
// set. Immutable once built.
class SimilarityGraph {
 public:
  // Validates symmetry (exact), nonnegativity, zero diagonal, a positive
  // weight on every node and connectivity.
  static SimilarityGraph FromWeights(SparseMatrix weights, Index k = 0);

  // Convenience for tests and hand-built graphs: undirected weighted edges.
  static SimilarityGraph FromEdges(
      Index n, const std::vector<std::pair<std::pair<Index, Index>, double>>&
                   edges);

  Index num_nodes() const { return static_cast<Index>(weights_.rows()); }
  Index k() const { return k_; }
  const SparseMatrix& weights() const { return weights_; }
  Vector degrees() const;

 private:
  SimilarityGraph(SparseMatrix weights, Index k)
      : weights_(std::move(weights)), k_(k) {}

  SparseMatrix weights_;
  Index k_ = 0;
};

// Self-tuning Gaussian kNN graph: w_ij = exp(-4 |x_i - x_j|^2 / d_k(x_i)^2)
// on the k nearest neighbours of i, then W <- (W + W^T) / 2.
SimilarityGraph build_knn_graph(const FeatureMatrix& features,
                                const GraphOptions& options = {});

// Number of connected components of the positive-weight pattern.
Index count_components(const SparseMatrix& weights);

// Reweighted Laplacian L_g = D_g - A_g with A_g[i,j] = g_i g_j w_ij.
class SparseOperator {
 public:
  const SparseMatrix& laplacian() const { return laplacian_; }
  Index size() const { return static_cast<Index>(laplacian_.rows()); }

 private:
  friend SparseOperator assemble_laplacian(const SimilarityGraph&,
                                           const Vector&);
  explicit SparseOperator(SparseMatrix l) : laplacian_(std::move(l)) {}

  SparseMatrix laplacian_;
};

// An empty gamma means uniform weights. Throws NonPositiveGamma.
SparseOperator assemble_laplacian(const SimilarityGraph& graph,
                                  const Vector& gamma = Vector());

}  // namespace pwll
