#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pwll/datasets.hpp"
#include "pwll/errors.hpp"
#include "pwll/graph.hpp"

namespace pwll {
namespace {

FeatureMatrix Points1D(const std::vector<double>& xs) {
  FeatureMatrix f(static_cast<Eigen::Index>(xs.size()), 1);
  for (std::size_t i = 0; i < xs.size(); ++i) f(static_cast<Eigen::Index>(i), 0) = xs[i];
  return f;
}

TEST(KnnGraph, CollinearTripleK1) {
  // Node 1 is equidistant from 0 and 2 and keeps the lower index, so 0-1 is
  // a mutual edge and 1-2 is one-sided.
  const auto g = build_knn_graph(Points1D({0.0, 1.0, 2.0}), {1, false});
  const SparseMatrix& w = g.weights();
  EXPECT_DOUBLE_EQ(w.coeff(0, 1), std::exp(-4.0));
  EXPECT_DOUBLE_EQ(w.coeff(1, 2), std::exp(-4.0) / 2.0);
  EXPECT_EQ(w.coeff(0, 2), 0.0);
  EXPECT_EQ(g.num_nodes(), 3u);
}

TEST(KnnGraph, ExactlySymmetric) {
  Rng rng(5);
  FeatureMatrix f(200, 3);
  for (Eigen::Index i = 0; i < f.size(); ++i) f.data()[i] = rng.normal();
  const auto g = build_knn_graph(f, {7, false});
  const SparseMatrix wt = g.weights().transpose();
  const SparseMatrix diff = g.weights() - wt;
  for (Eigen::Index r = 0; r < diff.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(diff, r); it; ++it) {
      EXPECT_EQ(it.value(), 0.0);
    }
  }
}

TEST(KnnGraph, BlobsConnectedWithDegreeAtLeastK) {
  const Dataset d = gen_blobs(0);
  const auto g = build_knn_graph(d.features, {10, false});
  EXPECT_EQ(g.num_nodes(), 2400u);
  EXPECT_EQ(count_components(g.weights()), 1u);
  for (Eigen::Index r = 0; r < g.weights().outerSize(); ++r) {
    EXPECT_GE(g.weights().innerVector(r).nonZeros(), 10);
  }
}

TEST(KnnGraph, WeightsNonnegativeZeroDiagonalAndBounded) {
  const Dataset d = gen_blobs(3);
  const auto g = build_knn_graph(d.features, {10, false});
  for (Eigen::Index r = 0; r < g.weights().outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(g.weights(), r); it; ++it) {
      EXPECT_NE(it.col(), r);
      EXPECT_GT(it.value(), 0.0);
      EXPECT_LE(it.value(), 1.0);
    }
  }
}

TEST(KnnGraph, MatchesBruteForceKernel) {
  Rng rng(11);
  FeatureMatrix f(40, 2);
  for (Eigen::Index i = 0; i < f.size(); ++i) f.data()[i] = rng.uniform();
  const Index k = 4;
  const auto g = build_knn_graph(f, {k, false});
  // Directed kernel matrix by brute force, then averaged.
  Eigen::MatrixXd dir = Eigen::MatrixXd::Zero(40, 40);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::pair<double, int>> d;
    for (int j = 0; j < 40; ++j) {
      if (j != i) d.push_back({(f.row(i) - f.row(j)).norm(), j});
    }
    std::sort(d.begin(), d.end());
    const double dk = d[k - 1].first;
    for (Index m = 0; m < k; ++m) {
      dir(i, d[m].second) = std::exp(-4.0 * d[m].first * d[m].first / (dk * dk));
    }
  }
  const Eigen::MatrixXd expect = 0.5 * (dir + dir.transpose());
  const Eigen::MatrixXd got = Eigen::MatrixXd(g.weights());
  EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(KnnGraph, DisconnectedInputRejected) {
  // Two far-apart triples with k = 2 never link.
  const auto f = Points1D({0.0, 0.1, 0.2, 100.0, 100.1, 100.2});
  try {
    build_knn_graph(f, {2, false});
    FAIL() << "expected DisconnectedGraph";
  } catch (const DisconnectedGraph& e) {
    EXPECT_EQ(e.components(), 2u);
  }
}

TEST(KnnGraph, DuplicatesErrorUnlessJitterEnabled) {
  const auto f = Points1D({0.0, 0.0, 0.0, 1.0, 2.0});
  EXPECT_THROW(build_knn_graph(f, {2, false}), DegenerateFeatures);
  const auto g = build_knn_graph(f, {2, true});
  EXPECT_EQ(count_components(g.weights()), 1u);
}

TEST(KnnGraph, PreconditionsChecked) {
  EXPECT_THROW(build_knn_graph(Points1D({0.0, 1.0}), {2, false}), InvalidArgument);
  EXPECT_THROW(build_knn_graph(Points1D({0.0, 1.0}), {0, false}), InvalidArgument);
  EXPECT_THROW(build_knn_graph(Points1D({0.0, NAN, 1.0}), {1, false}),
               InvalidArgument);
}

TEST(SimilarityGraphFromWeights, RejectsMalformedMatrices) {
  SparseMatrix asym(2, 2);
  asym.insert(0, 1) = 1.0;
  asym.insert(1, 0) = 0.5;
  EXPECT_THROW(SimilarityGraph::FromWeights(asym), InvalidArgument);

  SparseMatrix neg(2, 2);
  neg.insert(0, 1) = -1.0;
  neg.insert(1, 0) = -1.0;
  EXPECT_THROW(SimilarityGraph::FromWeights(neg), InvalidArgument);

  SparseMatrix loop(2, 2);
  loop.insert(0, 0) = 1.0;
  loop.insert(0, 1) = 1.0;
  loop.insert(1, 0) = 1.0;
  EXPECT_THROW(SimilarityGraph::FromWeights(loop), InvalidArgument);

  SparseMatrix isolated(3, 3);
  isolated.insert(0, 1) = 1.0;
  isolated.insert(1, 0) = 1.0;
  EXPECT_THROW(SimilarityGraph::FromWeights(isolated), InvalidArgument);
}

SimilarityGraph P3() {
  return SimilarityGraph::FromEdges(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}});
}

TEST(Laplacian, PathUniform) {
  const Eigen::MatrixXd l = Eigen::MatrixXd(assemble_laplacian(P3()).laplacian());
  Eigen::Matrix3d expect;
  expect << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  EXPECT_EQ((l - expect).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Laplacian, PathReweighted) {
  const Eigen::MatrixXd l =
      Eigen::MatrixXd(assemble_laplacian(P3(), Vector{{2.0, 1.0, 1.0}}).laplacian());
  Eigen::Matrix3d expect;
  expect << 2, -2, 0, -2, 3, -1, 0, -1, 1;
  EXPECT_EQ((l - expect).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Laplacian, NonPositiveGammaRejected) {
  EXPECT_THROW(assemble_laplacian(P3(), Vector{{1.0, 0.0, 1.0}}), NonPositiveGamma);
  EXPECT_THROW(assemble_laplacian(P3(), Vector{{1.0, -2.0, 1.0}}), NonPositiveGamma);
  EXPECT_THROW(assemble_laplacian(P3(), Vector{{1.0, 1.0}}), InvalidArgument);
}

// Property suite over random graphs and random positive gamma.
TEST(LaplacianProperties, RowSumsPsdAndConstantKernel) {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + rng.index(49);
    const auto w = testing::random_connected_weights(n, 0.1, rng);
    Vector gamma(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < gamma.size(); ++i) gamma[i] = 1.0 + 5.0 * rng.uniform();
    const SparseMatrix l = assemble_laplacian(testing::to_graph(w), gamma).laplacian();

    const Eigen::MatrixXd dense = Eigen::MatrixXd(l);
    EXPECT_LT((dense - testing::dense_laplacian(w, gamma)).cwiseAbs().maxCoeff(), 1e-12);

    const double max_deg = dense.diagonal().maxCoeff();
    const Vector ones = Vector::Ones(static_cast<Eigen::Index>(n));
    EXPECT_LE((l * ones).cwiseAbs().maxCoeff(), 1e-10 * max_deg);
    for (Eigen::Index r = 0; r < dense.rows(); ++r) {
      EXPECT_GE(dense(r, r), 0.0);
      for (Eigen::Index c = 0; c < dense.cols(); ++c) {
        if (c != r) EXPECT_LE(dense(r, c), 0.0);
      }
    }
    for (int v = 0; v < 100; ++v) {
      Vector x(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.normal();
      EXPECT_GE(x.dot(l * x), -1e-10 * x.squaredNorm());
    }
  }
}

}  // namespace
}  // namespace pwll
