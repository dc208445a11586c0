#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "pwll/active_loop.hpp"

namespace pwll {

struct LabelEvent {
  Index index;
  int observed_class;
};

enum class LabelOutcome { kApplied, kAlreadyLabeled, kClassOutOfRange, kIndexOutOfRange };

// One interactive labeling session over an immutable dataset and graph.
// Label events are serialized; readers see a consistent state.
class LabelingSession {
 public:
  // Draws the initial labels with config.initial_rule and looks their
  // classes up in the dataset.
  LabelingSession(std::string id, std::shared_ptr<const Dataset> dataset,
                  std::shared_ptr<const SimilarityGraph> graph,
                  const ExperimentConfig& config);

  const std::string& id() const { return id_; }
  const Dataset& dataset() const { return *dataset_; }

  // Leaves the state untouched unless the outcome is kApplied.
  LabelOutcome label(Index index, int observed_class);

  // Runs f(const ActiveLearner&, suggestion, history) under a shared lock.
  template <typename F>
  auto read(F&& f) const {
    std::shared_lock lock(mutex_);
    return f(static_cast<const ActiveLearner&>(*learner_), suggestion_,
             static_cast<const std::vector<LabelEvent>&>(history_));
  }

  // Settings that replay the session through run_experiment: explicit
  // initial labels and the recorded queries forced in order.
  ExperimentConfig replay_config() const;
  // Oracle answering with the recorded labels (ground truth for the
  // initial ones).
  Oracle replay_oracle() const;

 private:
  std::string id_;
  std::shared_ptr<const Dataset> dataset_;
  std::shared_ptr<const SimilarityGraph> graph_;
  ExperimentConfig config_;
  std::unique_ptr<ActiveLearner> learner_;
  std::vector<LabelEvent> history_;
  Index suggestion_ = 0;
  mutable std::shared_mutex mutex_;
};

}  // namespace pwll
