#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "pwll/datasets.hpp"
#include "pwll/errors.hpp"
#include "pwll/graph.hpp"

namespace pwll {
namespace {

TEST(Blobs, ShapeAndClasses) {
  const Dataset d = gen_blobs(1);
  EXPECT_EQ(d.size(), 2400u);
  EXPECT_EQ(d.dimension(), 2u);
  EXPECT_EQ(d.num_classes(), 2);
  EXPECT_EQ(d.num_clusters(), 8);
  std::vector<int> sizes(8, 0);
  for (Index i = 0; i < d.size(); ++i) {
    ++sizes[static_cast<Index>(d.cluster_ids[i])];
    EXPECT_EQ(d.true_labels[i], d.cluster_ids[i] % 2);
  }
  for (int s : sizes) EXPECT_EQ(s, 300);
  EXPECT_NO_THROW(d.validate());
}

TEST(Blobs, ClusterMeansNearTargets) {
  constexpr double kPi = 3.14159265358979323846;
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const Dataset d = gen_blobs(seed);
    for (int c = 0; c < 8; ++c) {
      double mx = 0.0, my = 0.0;
      for (Index i = 0; i < d.size(); ++i) {
        if (d.cluster_ids[i] != c) continue;
        mx += d.features(static_cast<Eigen::Index>(i), 0);
        my += d.features(static_cast<Eigen::Index>(i), 1);
      }
      mx /= 300.0;
      my /= 300.0;
      const double tol = 0.17 / std::sqrt(300.0) * 4.0;
      EXPECT_NEAR(mx, std::cos(kPi * c / 4.0), tol);
      EXPECT_NEAR(my, std::sin(kPi * c / 4.0), tol);
    }
  }
}

TEST(Blobs, Deterministic) {
  const Dataset a = gen_blobs(9), b = gen_blobs(9), c = gen_blobs(10);
  EXPECT_TRUE(a.features == b.features);
  EXPECT_FALSE(a.features == c.features);
}

TEST(Box, LatticeMinusBand) {
  const Dataset full = gen_box(0.0);
  EXPECT_EQ(full.size(), 4225u);
  const Dataset d = gen_box();
  EXPECT_EQ(d.size(), 4160u);
  for (Index i = 0; i < d.size(); ++i) {
    const double x = d.features(static_cast<Eigen::Index>(i), 0);
    EXPECT_GE(std::abs(x - 0.3), 0.01);
    EXPECT_EQ(d.true_labels[i], x < 0.3 ? 0 : 1);
    EXPECT_EQ(d.cluster_ids[i], d.true_labels[i]);
  }
}

TEST(Box, EachSideConnectedAndGraphConnected) {
  const Dataset d = gen_box();
  const auto g = build_knn_graph(d.features, {10, false});
  for (int side = 0; side < 2; ++side) {
    // Restrict W to one class and count its components.
    std::vector<Index> members;
    std::vector<long> pos(d.size(), -1);
    for (Index i = 0; i < d.size(); ++i) {
      if (d.true_labels[i] == side) {
        pos[i] = static_cast<long>(members.size());
        members.push_back(i);
      }
    }
    std::vector<Eigen::Triplet<double>> t;
    for (Index i : members) {
      for (SparseMatrix::InnerIterator it(g.weights(), static_cast<Eigen::Index>(i)); it; ++it) {
        const long j = pos[static_cast<Index>(it.col())];
        if (j >= 0) t.emplace_back(pos[i], j, it.value());
      }
    }
    SparseMatrix sub(static_cast<Eigen::Index>(members.size()),
                     static_cast<Eigen::Index>(members.size()));
    sub.setFromTriplets(t.begin(), t.end());
    EXPECT_EQ(count_components(sub), 1u) << "side " << side;
  }
}

TEST(Box, WiderBandDisconnects) {
  const Dataset d = gen_box(0.02);
  EXPECT_EQ(d.size(), 4225u - 3u * 65u);
  EXPECT_THROW(build_knn_graph(d.features, {10, false}), DisconnectedGraph);
}

Dataset TenClasses() {
  Dataset d;
  d.name = "ten";
  d.features = FeatureMatrix::Zero(47, 1);
  for (int i = 0; i < 47; ++i) {
    d.features(i, 0) = i;
    d.true_labels.push_back(i);
    d.cluster_ids.push_back(i);
  }
  return d;
}

TEST(RelabelModK, TableMappings) {
  Dataset ten = TenClasses();
  ten.features.conservativeResize(10, 1);
  ten.true_labels.resize(10);
  ten.cluster_ids.resize(10);
  const Dataset r = relabel_mod_k(ten, 3);
  std::set<int> class0;
  for (Index i = 0; i < r.size(); ++i) {
    if (r.true_labels[i] == 0) class0.insert(r.cluster_ids[i]);
  }
  EXPECT_EQ(class0, (std::set<int>{0, 3, 6, 9}));
  EXPECT_NO_THROW(r.validate());

  const Dataset big = relabel_mod_k(TenClasses(), 5);
  std::set<int> class4;
  for (Index i = 0; i < big.size(); ++i) {
    if (big.true_labels[i] == 4) class4.insert(big.cluster_ids[i]);
  }
  std::set<int> expect;
  for (int c = 4; c <= 44; c += 5) expect.insert(c);
  EXPECT_EQ(class4, expect);
}

TEST(RelabelModK, IdentityAndErrors) {
  const Dataset d = TenClasses();
  EXPECT_EQ(relabel_mod_k(d, 47).true_labels, d.true_labels);
  EXPECT_THROW(relabel_mod_k(d, 48), KTooLarge);
  EXPECT_THROW(relabel_mod_k(d, 1), InvalidArgument);
}

TEST(DatasetValidate, RejectsBrokenInvariants) {
  Dataset d = TenClasses();
  d.true_labels[0] = 1;  // class 0 now missing
  EXPECT_THROW(d.validate(), InvalidArgument);
  d = TenClasses();
  d.cluster_ids[1] = 0;  // cluster 0 now spans two classes
  EXPECT_THROW(d.validate(), InvalidArgument);
  d = TenClasses();
  d.true_labels.pop_back();
  EXPECT_THROW(d.validate(), InvalidArgument);
}

TEST(Kde, UniformGridK1) {
  const double h = 0.25;
  FeatureMatrix f(20, 1);
  for (int i = 0; i < 20; ++i) f(i, 0) = i * h;
  const KdeEstimate k = knn_kde(f, 1);
  for (Eigen::Index i = 0; i < 20; ++i) EXPECT_DOUBLE_EQ(k.values[i], 1.0 / (h + 1e-12));
  EXPECT_DOUBLE_EQ(k.threshold, 1.0 / (h + 1e-12));
}

TEST(Kde, OutlierBelowThresholdAndTranslationInvariant) {
  const double h = 1.0;
  FeatureMatrix f(100, 1);
  for (int i = 0; i < 99; ++i) f(i, 0) = i * h;
  f(99, 0) = 98 * h + 10 * h;
  const KdeEstimate k = knn_kde(f, 1);
  EXPECT_NEAR(k.values[99], 1.0 / (10 * h), 1e-9);
  EXPECT_LT(k.values[99], k.threshold);
  FeatureMatrix shifted = f.array() + 123.0;
  const KdeEstimate ks = knn_kde(shifted, 1);
  EXPECT_LT((ks.values - k.values).cwiseAbs().maxCoeff(), 1e-9);
}

}  // namespace
}  // namespace pwll
