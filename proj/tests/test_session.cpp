#include <gtest/gtest.h>

#include <memory>

#include "pwll/datasets.hpp"
#include "pwll/graph.hpp"
#include "pwll/session.hpp"

namespace pwll {
namespace {

struct Shared {
  Shared()
      : data(std::make_shared<const Dataset>(gen_blobs(8))),
        graph(std::make_shared<const SimilarityGraph>(build_knn_graph(data->features, {}))) {}
  std::shared_ptr<const Dataset> data;
  std::shared_ptr<const SimilarityGraph> graph;
};

ExperimentConfig Norm(std::uint64_t seed) {
  ExperimentConfig c;
  c.acquisition = acquisition_preset("norm", 1.0, {});
  c.seed = seed;
  return c;
}

TEST(Session, OutcomesLeaveStateUntouchedOnError) {
  const Shared s;
  LabelingSession session("a", s.data, s.graph, Norm(1));
  const Index first = session.read([](const ActiveLearner& l, Index, const auto&) {
    return l.log().initial_labels.front();
  });
  const Index sugg = session.read([](const ActiveLearner&, Index sg, const auto&) { return sg; });
  EXPECT_EQ(session.label(first, 0), LabelOutcome::kAlreadyLabeled);
  EXPECT_EQ(session.label(5, 2), LabelOutcome::kClassOutOfRange);
  EXPECT_EQ(session.label(5, -1), LabelOutcome::kClassOutOfRange);
  EXPECT_EQ(session.label(2400, 0), LabelOutcome::kIndexOutOfRange);
  session.read([&](const ActiveLearner& l, Index sg, const auto& history) {
    EXPECT_EQ(l.queries(), 0u);
    EXPECT_EQ(sg, sugg);
    EXPECT_TRUE(history.empty());
    return 0;
  });
  EXPECT_EQ(session.label(sugg, s.data->true_labels[sugg]), LabelOutcome::kApplied);
  EXPECT_EQ(session.label(sugg, 0), LabelOutcome::kAlreadyLabeled);
  session.read([&](const ActiveLearner& l, Index sg, const auto& history) {
    EXPECT_EQ(l.queries(), 1u);
    EXPECT_NE(sg, sugg);
    EXPECT_EQ(history.size(), 1u);
    return 0;
  });
}

TEST(Session, ReplayThroughExperimentMatches) {
  const Shared s;
  LabelingSession session("b", s.data, s.graph, Norm(2));
  // Mix of followed suggestions, a user-chosen point and a wrong label.
  for (int step = 0; step < 8; ++step) {
    Index next = session.read([](const ActiveLearner&, Index sg, const auto&) { return sg; });
    int y = s.data->true_labels[next];
    if (step == 3) {
      next = 1234;
      y = s.data->true_labels[next];
    }
    if (step == 5) y = 1 - y;
    ASSERT_EQ(session.label(next, y), LabelOutcome::kApplied);
  }
  const IterationLog live = session.read(
      [](const ActiveLearner& l, Index, const auto&) { return l.log(); });
  const IterationLog replay = run_experiment(*s.data, *s.graph, session.replay_config(),
                                             session.replay_oracle());
  ASSERT_EQ(replay.records.size(), live.records.size());
  for (Index n = 0; n < live.records.size(); ++n) {
    EXPECT_EQ(replay.records[n].query_index, live.records[n].query_index);
    EXPECT_EQ(replay.records[n].observed_class, live.records[n].observed_class);
    EXPECT_EQ(replay.records[n].accuracy, live.records[n].accuracy);
    EXPECT_EQ(replay.records[n].cluster_proportion, live.records[n].cluster_proportion);
  }
}

TEST(Session, EmptyHistoryReplaysInitialState) {
  const Shared s;
  LabelingSession session("c", s.data, s.graph, Norm(3));
  const IterationLog replay = run_experiment(*s.data, *s.graph, session.replay_config(),
                                             session.replay_oracle());
  EXPECT_EQ(replay.records.size(), 1u);
}

}  // namespace
}  // namespace pwll
