#include "pwll/session.hpp"

#include <map>

#include "pwll/errors.hpp"

namespace pwll {

LabelingSession::LabelingSession(std::string id,
                                 std::shared_ptr<const Dataset> dataset,
                                 std::shared_ptr<const SimilarityGraph> graph,
                                 const ExperimentConfig& config)
    : id_(std::move(id)),
      dataset_(std::move(dataset)),
      graph_(std::move(graph)),
      config_(config) {
  config_.validate();
  learner_ = std::make_unique<ActiveLearner>(*dataset_, *graph_,
                                             config_.acquisition, config_.seed,
                                             config_);
  std::vector<std::pair<Index, int>> initial;
  for (Index i : learner_->draw_initial(config_.initial_rule)) {
    if (i >= dataset_->size()) throw InvalidArgument("initial label out of range");
    initial.emplace_back(i, dataset_->true_labels[i]);
  }
  learner_->start(initial);
  if (learner_->labels().labeled().size() < dataset_->size()) {
    suggestion_ = learner_->suggest();
  }
}

LabelOutcome LabelingSession::label(Index index, int observed_class) {
  std::unique_lock lock(mutex_);
  if (index >= dataset_->size()) return LabelOutcome::kIndexOutOfRange;
  if (observed_class < 0 || observed_class >= dataset_->num_classes()) {
    return LabelOutcome::kClassOutOfRange;
  }
  if (learner_->labels().is_labeled(index)) return LabelOutcome::kAlreadyLabeled;
  learner_->label(index, observed_class);
  history_.push_back({index, observed_class});
  if (learner_->labels().labeled().size() < dataset_->size()) {
    suggestion_ = learner_->suggest();
  }
  return LabelOutcome::kApplied;
}

ExperimentConfig LabelingSession::replay_config() const {
  std::shared_lock lock(mutex_);
  ExperimentConfig c = config_;
  c.initial_rule = InitialRule::kExplicit;
  c.initial_labels = learner_->log().initial_labels;
  c.forced_queries.clear();
  for (const LabelEvent& e : history_) c.forced_queries.push_back(e.index);
  c.n_queries = history_.size();
  return c;
}

Oracle LabelingSession::replay_oracle() const {
  std::shared_lock lock(mutex_);
  std::map<Index, int> answers;
  for (Index i : learner_->log().initial_labels) {
    answers[i] = dataset_->true_labels[i];
  }
  for (const LabelEvent& e : history_) answers[e.index] = e.observed_class;
  auto dataset = dataset_;
  return [answers = std::move(answers), dataset](Index i) {
    auto it = answers.find(i);
    return it != answers.end() ? it->second : dataset->true_labels.at(i);
  };
}

}  // namespace pwll
