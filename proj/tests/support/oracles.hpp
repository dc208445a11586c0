#pragma once

// Dense reference computations used as independent oracles. Nothing here
// calls into the sparse code paths under test.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pwll/graph.hpp"
#include "pwll/rng.hpp"

namespace pwll::testing {

using DenseMatrix = Eigen::MatrixXd;

// Random connected weighted graph: a random spanning tree plus extra edges,
// weights uniform in [0.1, 1].
DenseMatrix random_connected_weights(Index n, double extra_edge_prob, Rng& rng);

SimilarityGraph to_graph(const DenseMatrix& w);

// L_g = diag(A 1) - A with A_ij = g_i g_j w_ij.
DenseMatrix dense_laplacian(const DenseMatrix& w, const Eigen::VectorXd& gamma);

// Mean-zero solution of L w = f via (L + 11^T / N) w = f.
Eigen::VectorXd dense_poisson(const DenseMatrix& w,
                              const std::vector<Index>& labeled);

// Full N x C PWLL-tau solution: ((L_g)_UU + tau I) u_U = (A_g)_UL Y.
DenseMatrix dense_pwll(const DenseMatrix& w, const Eigen::VectorXd& gamma,
                       const std::vector<Index>& labeled,
                       const std::vector<int>& classes, int num_classes,
                       double tau);

// Random distinct labeled indices with random classes, every class used
// at least once when possible.
struct RandomLabels {
  std::vector<Index> indices;
  std::vector<int> classes;
};
RandomLabels random_labels(Index n, int num_classes, Index count, Rng& rng);

}  // namespace pwll::testing
