#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pwll/rng.hpp"
#include "pwll/types.hpp"

namespace pwll {

enum class ScoreKind { kNorm, kMargin, kRandom };

const char* to_string(ScoreKind kind);

// Scores on the unlabeled set, higher = query it. indices ascending.
struct AcquisitionScores {
  ScoreKind kind = ScoreKind::kNorm;
  std::vector<Index> indices;
  std::vector<double> values;

  Index size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
};

// -|u(x)|_2.
AcquisitionScores score_norm(const Matrix& u, const std::vector<Index>& unlabeled);
// -(top1 - top2). Needs C >= 2.
AcquisitionScores score_margin(const Matrix& u,
                               const std::vector<Index>& unlabeled);
// All-zero scores; only the random policy is meaningful on them.
AcquisitionScores score_random(const std::vector<Index>& unlabeled);

// tau_n = tau0 mu^n for n < 2K, 0 afterwards, mu = (eps / tau0)^(1 / 2K).
struct TauSchedule {
  double tau0 = 1.0;
  int K = 8;
  double eps = 1e-9;

  double mu() const;
  void validate() const;  // tau0 > 0, K >= 1, 0 < eps < tau0
};

double tau_at(const TauSchedule& schedule, Index n);

// Policy 1. Ties go to the lowest index. Throws EmptyUnlabeledSet.
Index policy_argmax(const AcquisitionScores& scores);

// Policy 2. kde is over all N nodes; the threshold is its nearest-rank
// percentile over all of them and candidates need kde strictly above it.
// Falls back to policy_argmax when no candidate survives.
Index policy_kde_filtered(const AcquisitionScores& scores, const Vector& kde,
                          double percentile = 10.0);

// Policy 3 distribution: softmax of shifted scores at temperature
// max(eps_o, T0). Aligned with scores.indices.
struct ProportionalDistribution {
  std::vector<double> probabilities;
  double temperature = 1.0;
};
ProportionalDistribution proportional_probabilities(
    const AcquisitionScores& scores, double khat);
Index policy_proportional(const AcquisitionScores& scores, double khat,
                          Rng& rng);

Index policy_random(const std::vector<Index>& unlabeled, Rng& rng);

// "index,score" rows with a header.
void write_scores_csv(const AcquisitionScores& scores, std::ostream& out);

}  // namespace pwll
