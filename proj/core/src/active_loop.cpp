#include "pwll/active_loop.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "pwll/errors.hpp"

namespace pwll {

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kArgmax:
      return "argmax";
    case PolicyKind::kKdeFiltered:
      return "kde";
    case PolicyKind::kProportional:
      return "proportional";
    case PolicyKind::kRandom:
      return "random";
  }
  return "?";
}

const char* to_string(TauMode mode) {
  switch (mode) {
    case TauMode::kZero:
      return "zero";
    case TauMode::kFixed:
      return "fixed";
    case TauMode::kSchedule:
      return "schedule";
  }
  return "?";
}

const char* to_string(InitialRule rule) {
  switch (rule) {
    case InitialRule::kOnePerClass:
      return "one-per-class";
    case InitialRule::kOneTotal:
      return "one-total";
    case InitialRule::kExplicit:
      return "explicit";
  }
  return "?";
}

double AcquisitionSpec::tau_at_iteration(Index n) const {
  switch (tau_mode) {
    case TauMode::kZero:
      return 0.0;
    case TauMode::kFixed:
      return tau;
    case TauMode::kSchedule:
      return tau_at(schedule, n);
  }
  return 0.0;
}

void AcquisitionSpec::validate() const {
  if (tau_mode == TauMode::kFixed && !(tau >= 0.0)) {
    throw InvalidArgument("fixed tau must be nonnegative");
  }
  if (tau_mode == TauMode::kSchedule) schedule.validate();
}

AcquisitionSpec acquisition_preset(const std::string& name, double tau,
                                   const TauSchedule& schedule) {
  AcquisitionSpec a;
  a.name = name;
  a.tau = tau;
  a.schedule = schedule;
  if (name == "sm") {
    a.score = ScoreKind::kMargin;
    a.tau_mode = TauMode::kZero;
  } else if (name == "norm") {
    a.score = ScoreKind::kNorm;
    a.tau_mode = TauMode::kFixed;
  } else if (name == "norm-decay") {
    a.score = ScoreKind::kNorm;
    a.tau_mode = TauMode::kSchedule;
  } else if (name == "random") {
    a.score = ScoreKind::kRandom;
    a.policy = PolicyKind::kRandom;
    a.tau_mode = TauMode::kZero;
  } else {
    throw InvalidArgument("unknown acquisition '" + name +
                          "' (expected sm, norm, norm-decay or random)");
  }
  return a;
}

void ExperimentConfig::validate() const {
  acquisition.validate();
  if (initial_rule == InitialRule::kExplicit && initial_labels.empty()) {
    throw InvalidArgument("explicit initial rule needs initial labels");
  }
  if (!(kde_percentile >= 0.0 && kde_percentile <= 100.0)) {
    throw InvalidArgument("kde percentile must lie in [0, 100]");
  }
  if (khat != 0.0 && !(khat >= 1.0)) {
    throw InvalidArgument("Khat must be at least 1");
  }
}

Oracle truth_oracle(const Dataset& dataset) {
  return [&dataset](Index i) { return dataset.true_labels.at(i); };
}

double accuracy(const std::vector<int>& predicted, const Dataset& dataset,
                const LabelState& labels) {
  if (predicted.size() != dataset.size()) {
    throw InvalidArgument("prediction count does not match the dataset");
  }
  Index total = 0, correct = 0;
  for (Index i = 0; i < predicted.size(); ++i) {
    if (labels.is_labeled(i)) continue;
    ++total;
    if (predicted[i] == dataset.true_labels[i]) ++correct;
  }
  return total == 0 ? 1.0
                    : static_cast<double>(correct) / static_cast<double>(total);
}

double cluster_proportion(const std::vector<Index>& labeled,
                          const Dataset& dataset) {
  std::set<int> hit;
  for (Index i : labeled) hit.insert(dataset.cluster_ids.at(i));
  return static_cast<double>(hit.size()) /
         static_cast<double>(dataset.num_clusters());
}

double default_khat(const Dataset& dataset) {
  std::map<int, Index> sizes;
  for (int c : dataset.cluster_ids) ++sizes[c];
  Index smallest = dataset.size();
  for (const auto& [id, count] : sizes) smallest = std::min(smallest, count);
  return static_cast<double>(dataset.size()) / static_cast<double>(smallest);
}

ActiveLearner::ActiveLearner(const Dataset& dataset,
                             const SimilarityGraph& graph,
                             AcquisitionSpec acquisition, std::uint64_t seed,
                             const ExperimentConfig& options)
    : dataset_(dataset),
      graph_(graph),
      acquisition_(std::move(acquisition)),
      options_(options),
      rng_(seed),
      labels_(dataset.size(), dataset.num_classes()) {
  if (graph.num_nodes() != dataset.size()) {
    throw InvalidArgument("graph and dataset sizes differ");
  }
  acquisition_.validate();
  if (acquisition_.policy == PolicyKind::kKdeFiltered) {
    const Index k = options_.kde_k != 0 ? options_.kde_k
                                        : std::max<Index>(graph.k(), 1);
    kde_ = knn_kde(dataset.features, k, options_.kde_percentile).values;
  }
  khat_ = options_.khat != 0.0 ? options_.khat : default_khat(dataset);
}

std::vector<Index> ActiveLearner::draw_initial(InitialRule rule) {
  std::vector<Index> out;
  switch (rule) {
    case InitialRule::kOnePerClass: {
      const int c = dataset_.num_classes();
      std::vector<std::vector<Index>> members(static_cast<Index>(c));
      for (Index i = 0; i < dataset_.size(); ++i) {
        members[static_cast<Index>(dataset_.true_labels[i])].push_back(i);
      }
      for (const auto& m : members) out.push_back(m[rng_.index(m.size())]);
      break;
    }
    case InitialRule::kOneTotal:
      out.push_back(rng_.index(dataset_.size()));
      break;
    case InitialRule::kExplicit:
      out = options_.initial_labels;
      break;
  }
  return out;
}

void ActiveLearner::start(const std::vector<std::pair<Index, int>>& initial) {
  if (started_) throw InvalidArgument("learner already started");
  if (initial.empty()) throw EmptyLabeledSet();
  for (const auto& [i, y] : initial) {
    labels_.add(i, y);
    log_.initial_labels.push_back(i);
  }
  started_ = true;
  Recompute(-1, -1, 0.0);
}

void ActiveLearner::label(Index index, int observed_class) {
  if (!started_) throw InvalidArgument("learner not started");
  const auto t0 = std::chrono::steady_clock::now();
  labels_.add(index, observed_class);
  ++queries_;
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  Recompute(static_cast<long long>(index), observed_class, ms);
}

void ActiveLearner::Recompute(long long query, int observed,
                              double elapsed_ms_before) {
  const auto t0 = std::chrono::steady_clock::now();
  const bool warm = options_.warm_start && solution_.u.size() != 0;

  weights_ = solve_gamma(graph_, labels_.labeled(), options_.cg,
                         warm ? weights_.raw : Vector());
  SolveOptions so;
  so.cg = options_.cg;
  if (warm) so.warm_start = &solution_.u;
  NodeFunction next = solve_pwll(graph_, weights_, labels_,
                                 acquisition_.tau_at_iteration(queries_), so);
  solution_ = std::move(next);
  predictions_ = classify(solution_.u);

  const std::vector<Index> unlabeled = labels_.unlabeled();
  switch (acquisition_.score) {
    case ScoreKind::kNorm:
      scores_ = score_norm(solution_.u, unlabeled);
      break;
    case ScoreKind::kMargin:
      scores_ = score_margin(solution_.u, unlabeled);
      break;
    case ScoreKind::kRandom:
      scores_ = score_random(unlabeled);
      break;
  }
  suggestion_.reset();

  IterationRecord rec;
  rec.iteration = queries_;
  rec.query_index = query;
  rec.observed_class = observed;
  rec.accuracy = accuracy(predictions_, dataset_, labels_);
  rec.cluster_proportion = cluster_proportion(labels_.labeled(), dataset_);
  rec.tau = solution_.tau;
  if (options_.record_timing) {
    rec.ms = elapsed_ms_before +
             std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  }
  log_.records.push_back(rec);
}

Index ActiveLearner::suggest() {
  if (!started_) throw InvalidArgument("learner not started");
  if (suggestion_) return *suggestion_;
  if (scores_.empty()) throw EmptyUnlabeledSet();
  Index pick = 0;
  switch (acquisition_.policy) {
    case PolicyKind::kArgmax:
      pick = policy_argmax(scores_);
      break;
    case PolicyKind::kKdeFiltered:
      pick = policy_kde_filtered(scores_, kde_, options_.kde_percentile);
      break;
    case PolicyKind::kProportional:
      pick = policy_proportional(scores_, khat_, rng_);
      break;
    case PolicyKind::kRandom:
      pick = policy_random(scores_.indices, rng_);
      break;
  }
  suggestion_ = pick;
  return pick;
}

IterationLog run_experiment(const Dataset& dataset,
                            const SimilarityGraph& graph,
                            const ExperimentConfig& config,
                            const Oracle& oracle,
                            const IterationCallback& on_iteration) {
  config.validate();
  ActiveLearner learner(dataset, graph, config.acquisition, config.seed,
                        config);
  const int classes = dataset.num_classes();
  auto ask = [&](Index i) {
    const int y = oracle(i);
    if (y < 0 || y >= classes) throw OracleOutOfRange(i, y, classes);
    return y;
  };

  std::vector<std::pair<Index, int>> initial;
  for (Index i : learner.draw_initial(config.initial_rule)) {
    initial.emplace_back(i, ask(i));
  }
  learner.start(initial);
  if (on_iteration) on_iteration(learner, learner.log().records.back());

  for (Index n = 1; n <= config.n_queries; ++n) {
    if (learner.labels().labeled().size() == dataset.size()) break;
    Index q;
    if (!config.forced_queries.empty()) {
      if (n > config.forced_queries.size()) break;
      q = config.forced_queries[n - 1];
    } else {
      q = learner.suggest();
    }
    learner.label(q, ask(q));
    if (on_iteration) on_iteration(learner, learner.log().records.back());
  }
  return learner.log();
}

IterationLog run_experiment(const Dataset& dataset,
                            const ExperimentConfig& config,
                            const Oracle& oracle, Index graph_k) {
  GraphOptions go;
  go.k = graph_k;
  const SimilarityGraph graph = build_knn_graph(dataset.features, go);
  return run_experiment(dataset, graph, config, oracle);
}

}  // namespace pwll
