#include "pwll/acquisition.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <ostream>

#include "pwll/errors.hpp"
#include "pwll/stats.hpp"

namespace pwll {

const char* to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kNorm:
      return "norm";
    case ScoreKind::kMargin:
      return "margin";
    case ScoreKind::kRandom:
      return "random";
  }
  return "?";
}

namespace {

AcquisitionScores Prepare(ScoreKind kind, const std::vector<Index>& unlabeled) {
  AcquisitionScores s;
  s.kind = kind;
  s.indices = unlabeled;
  std::sort(s.indices.begin(), s.indices.end());
  s.values.resize(s.indices.size(), 0.0);
  return s;
}

void CheckRows(const Matrix& u, const std::vector<Index>& idx) {
  for (Index i : idx) {
    if (i >= static_cast<Index>(u.rows())) {
      throw InvalidArgument("score index out of range");
    }
  }
}

}  // namespace

AcquisitionScores score_norm(const Matrix& u,
                             const std::vector<Index>& unlabeled) {
  CheckRows(u, unlabeled);
  AcquisitionScores s = Prepare(ScoreKind::kNorm, unlabeled);
  for (Index r = 0; r < s.size(); ++r) {
    s.values[r] = -u.row(static_cast<Eigen::Index>(s.indices[r])).norm();
  }
  return s;
}

AcquisitionScores score_margin(const Matrix& u,
                               const std::vector<Index>& unlabeled) {
  if (u.cols() < 2) throw InvalidArgument("margin needs at least two classes");
  CheckRows(u, unlabeled);
  AcquisitionScores s = Prepare(ScoreKind::kMargin, unlabeled);
  for (Index r = 0; r < s.size(); ++r) {
    const auto row = u.row(static_cast<Eigen::Index>(s.indices[r]));
    double top1 = -INFINITY, top2 = -INFINITY;
    for (Eigen::Index c = 0; c < row.size(); ++c) {
      const double v = row[c];
      if (v > top1) {
        top2 = top1;
        top1 = v;
      } else if (v > top2) {
        top2 = v;
      }
    }
    s.values[r] = -(top1 - top2);
  }
  return s;
}

AcquisitionScores score_random(const std::vector<Index>& unlabeled) {
  return Prepare(ScoreKind::kRandom, unlabeled);
}

double TauSchedule::mu() const {
  return std::pow(eps / tau0, 1.0 / (2.0 * static_cast<double>(K)));
}

void TauSchedule::validate() const {
  if (!(tau0 > 0.0)) throw InvalidArgument("tau0 must be positive");
  if (K < 1) throw InvalidArgument("schedule K must be at least 1");
  if (!(eps > 0.0 && eps < tau0)) {
    throw InvalidArgument("schedule eps must lie in (0, tau0)");
  }
}

double tau_at(const TauSchedule& schedule, Index n) {
  if (n >= 2 * static_cast<Index>(schedule.K)) return 0.0;
  if (n == 0) return schedule.tau0;
  return schedule.tau0 * std::pow(schedule.mu(), static_cast<double>(n));
}

Index policy_argmax(const AcquisitionScores& scores) {
  if (scores.empty()) throw EmptyUnlabeledSet();
  Index best = 0;
  for (Index r = 1; r < scores.size(); ++r) {
    const double v = scores.values[r], b = scores.values[best];
    if (v > b || (v == b && scores.indices[r] < scores.indices[best])) best = r;
  }
  return scores.indices[best];
}

Index policy_kde_filtered(const AcquisitionScores& scores, const Vector& kde,
                          double percentile) {
  if (scores.empty()) throw EmptyUnlabeledSet();
  for (Eigen::Index i = 0; i < kde.size(); ++i) {
    if (!std::isfinite(kde[i]) || !(kde[i] > 0.0)) {
      throw InvalidArgument("kde values must be finite and positive");
    }
  }
  const double threshold = nearest_rank_percentile(
      std::vector<double>(kde.data(), kde.data() + kde.size()), percentile);

  AcquisitionScores kept;
  kept.kind = scores.kind;
  for (Index r = 0; r < scores.size(); ++r) {
    const Index i = scores.indices[r];
    if (i >= static_cast<Index>(kde.size())) {
      throw InvalidArgument("kde is shorter than the score index range");
    }
    if (kde[static_cast<Eigen::Index>(i)] > threshold) {
      kept.indices.push_back(i);
      kept.values.push_back(scores.values[r]);
    }
  }
  return kept.empty() ? policy_argmax(scores) : policy_argmax(kept);
}

ProportionalDistribution proportional_probabilities(
    const AcquisitionScores& scores, double khat) {
  if (scores.empty()) throw EmptyUnlabeledSet();
  if (!(khat >= 1.0)) throw InvalidArgument("Khat must be at least 1");
  const double lo = *std::min_element(scores.values.begin(), scores.values.end());
  std::vector<double> shifted(scores.size());
  for (Index r = 0; r < scores.size(); ++r) shifted[r] = scores.values[r] - lo;
  const double m = *std::max_element(shifted.begin(), shifted.end());

  ProportionalDistribution out;
  out.probabilities.assign(scores.size(), 0.0);
  if (m == 0.0) {
    out.temperature = 1.0;
    std::fill(out.probabilities.begin(), out.probabilities.end(),
              1.0 / static_cast<double>(scores.size()));
    return out;
  }
  const double phi =
      nearest_rank_percentile(shifted, 100.0 * (1.0 - 1.0 / khat));
  const double t0 = (m - phi) / m;
  const double eps_o =
      m / (std::log(DBL_MAX) - std::log(static_cast<double>(scores.size())));
  out.temperature = std::max(eps_o, t0);

  double total = 0.0;
  for (Index r = 0; r < scores.size(); ++r) {
    out.probabilities[r] = std::exp((shifted[r] - m) / out.temperature);
    total += out.probabilities[r];
  }
  for (double& p : out.probabilities) p /= total;
  return out;
}

Index policy_proportional(const AcquisitionScores& scores, double khat,
                          Rng& rng) {
  const ProportionalDistribution d = proportional_probabilities(scores, khat);
  const double target = rng.uniform();
  double acc = 0.0;
  for (Index r = 0; r < d.probabilities.size(); ++r) {
    acc += d.probabilities[r];
    if (target < acc) return scores.indices[r];
  }
  // Rounding left the cumulative sum just short of 1.
  for (Index r = d.probabilities.size(); r-- > 0;) {
    if (d.probabilities[r] > 0.0) return scores.indices[r];
  }
  return scores.indices.back();
}

Index policy_random(const std::vector<Index>& unlabeled, Rng& rng) {
  if (unlabeled.empty()) throw EmptyUnlabeledSet();
  return unlabeled[rng.index(unlabeled.size())];
}

void write_scores_csv(const AcquisitionScores& scores, std::ostream& out) {
  const auto old = out.precision(17);
  out << "index,score\n";
  for (Index r = 0; r < scores.size(); ++r) {
    out << scores.indices[r] << ',' << scores.values[r] << '\n';
  }
  out.precision(old);
}

}  // namespace pwll
