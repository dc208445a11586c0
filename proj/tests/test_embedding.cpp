#include <gtest/gtest.h>

#include "pwll/active_loop.hpp"
#include "pwll/config.hpp"
#include "pwll/feature_io.hpp"
#include "pwll/graph.hpp"

namespace pwll {
namespace {

// Digits (mod-3 classes over ten digit clusters), k = 20. Exploration
// should cover at least as many digits as random sampling by query 50.
TEST(Embedding, NormCoversClustersAtLeastAsWellAsRandom) {
  const Dataset d = load_dataset(PWLL_FIXTURE_DIR "/digits_mod3.csv");
  ASSERT_EQ(d.size(), 1797u);
  ASSERT_EQ(d.num_classes(), 3);
  ASSERT_EQ(d.num_clusters(), 10);
  GraphOptions go;
  go.k = 20;
  go.jitter_duplicates = true;
  const SimilarityGraph g = build_knn_graph(d.features, go);
  RunConfig cfg;
  cfg.n_queries = 50;
  double norm = 0.0, random = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = run_experiment(d, g, cfg.experiment("norm", seed), truth_oracle(d));
    const auto b = run_experiment(d, g, cfg.experiment("random", seed), truth_oracle(d));
    norm += a.records.back().cluster_proportion;
    random += b.records.back().cluster_proportion;
  }
  RecordProperty("norm_mean_cp", std::to_string(norm / 5));
  RecordProperty("random_mean_cp", std::to_string(random / 5));
  EXPECT_GE(norm, random) << norm / 5 << " vs " << random / 5;
}

}  // namespace
}  // namespace pwll
