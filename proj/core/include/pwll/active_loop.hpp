#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pwll/acquisition.hpp"
#include "pwll/dataset.hpp"
#include "pwll/datasets.hpp"
#include "pwll/graph.hpp"
#include "pwll/pwll_solver.hpp"
#include "pwll/reweighting.hpp"
#include "pwll/rng.hpp"

namespace pwll {

enum class PolicyKind { kArgmax, kKdeFiltered, kProportional, kRandom };
enum class TauMode { kZero, kFixed, kSchedule };
enum class InitialRule { kOnePerClass, kOneTotal, kExplicit };

const char* to_string(PolicyKind kind);
const char* to_string(TauMode mode);
const char* to_string(InitialRule rule);

// Score, classifier tau and selection policy of one acquisition.
struct AcquisitionSpec {
  std::string name = "norm";  // label used in file names and manifests
  ScoreKind score = ScoreKind::kNorm;
  PolicyKind policy = PolicyKind::kArgmax;
  TauMode tau_mode = TauMode::kFixed;
  double tau = 1.0;  // kFixed
  TauSchedule schedule;  // kSchedule

  double tau_at_iteration(Index n) const;
  void validate() const;
};

// Presets: "sm" (margin, tau = 0), "norm" (fixed tau), "norm-decay"
// (schedule), "random" (random policy, tau = 0 classifier).
AcquisitionSpec acquisition_preset(const std::string& name, double tau,
                                   const TauSchedule& schedule);

struct ExperimentConfig {
  AcquisitionSpec acquisition;
  Index n_queries = 100;
  std::uint64_t seed = 0;
  InitialRule initial_rule = InitialRule::kOnePerClass;
  std::vector<Index> initial_labels;  // kExplicit
  // When non-empty, query n is forced_queries[n-1] instead of the policy's
  // choice (replay of a recorded session).
  std::vector<Index> forced_queries;
  double kde_percentile = 10.0;
  Index kde_k = 0;    // 0: graph k
  double khat = 0.0;  // 0: N / smallest cluster size
  bool warm_start = true;
  bool record_timing = false;
  CgOptions cg;

  void validate() const;
};

// Row n is the state after n queries; row 0 holds the initial labels and has
// query_index = class = -1.
struct IterationRecord {
  Index iteration = 0;
  long long query_index = -1;
  int observed_class = -1;
  double accuracy = 0.0;
  double cluster_proportion = 0.0;
  double tau = 0.0;
  double ms = 0.0;
};

struct IterationLog {
  std::vector<IterationRecord> records;
  std::vector<Index> initial_labels;
};

using Oracle = std::function<int(Index)>;

// Ground-truth lookup; the returned oracle references the dataset.
Oracle truth_oracle(const Dataset& dataset);

// Fraction of X \ L where predicted == truth. 1 when X \ L is empty.
double accuracy(const std::vector<int>& predicted, const Dataset& dataset,
                const LabelState& labels);
double cluster_proportion(const std::vector<Index>& labeled,
                          const Dataset& dataset);

// Khat default: N divided by the smallest cluster size.
double default_khat(const Dataset& dataset);

// The loop state shared by batch experiments and interactive sessions:
// label set, gamma, u and scores for the current state.
class ActiveLearner {
 public:
  ActiveLearner(const Dataset& dataset, const SimilarityGraph& graph,
                AcquisitionSpec acquisition, std::uint64_t seed,
                const ExperimentConfig& options = {});

  // Seeds the label set (iteration 0) and solves.
  void start(const std::vector<std::pair<Index, int>>& initial);
  // Adds one queried label and re-solves. Throws InvalidArgument when the
  // index is labeled and OracleOutOfRange on a bad class.
  void label(Index index, int observed_class);

  // Policy choice for the next query; cached per state so repeated calls
  // agree (stochastic policies draw once).
  Index suggest();

  Index queries() const { return queries_; }
  const LabelState& labels() const { return labels_; }
  const NodeFunction& solution() const { return solution_; }
  const NodeWeights& weights() const { return weights_; }
  const AcquisitionScores& scores() const { return scores_; }
  const std::vector<int>& predictions() const { return predictions_; }
  const IterationLog& log() const { return log_; }
  const AcquisitionSpec& acquisition() const { return acquisition_; }
  const Dataset& dataset() const { return dataset_; }
  double current_tau() const { return solution_.tau; }

  // Draws the initial labels for a rule from this learner's generator.
  std::vector<Index> draw_initial(InitialRule rule);

 private:
  void Recompute(long long query, int observed, double elapsed_ms_before);

  const Dataset& dataset_;
  const SimilarityGraph& graph_;
  AcquisitionSpec acquisition_;
  ExperimentConfig options_;
  Rng rng_;
  LabelState labels_;
  NodeWeights weights_;
  NodeFunction solution_;
  AcquisitionScores scores_;
  std::vector<int> predictions_;
  std::optional<Index> suggestion_;
  Vector kde_;
  double khat_ = 1.0;
  Index queries_ = 0;
  bool started_ = false;
  IterationLog log_;
};

// Observer called after every state (including iteration 0).
using IterationCallback =
    std::function<void(const ActiveLearner&, const IterationRecord&)>;

IterationLog run_experiment(const Dataset& dataset,
                            const SimilarityGraph& graph,
                            const ExperimentConfig& config,
                            const Oracle& oracle,
                            const IterationCallback& on_iteration = {});

// Builds the kNN graph first.
IterationLog run_experiment(const Dataset& dataset,
                            const ExperimentConfig& config,
                            const Oracle& oracle, Index graph_k = 10);

}  // namespace pwll
