#pragma once

#include <vector>

#include "pwll/cg.hpp"
#include "pwll/graph.hpp"
#include "pwll/reweighting.hpp"
#include "pwll/types.hpp"

namespace pwll {

// Labeled indices in insertion order with their observed classes.
class LabelState {
 public:
  LabelState(Index num_nodes, int num_classes);

  // Throws InvalidArgument on an out-of-range or repeated index and
  // OracleOutOfRange on a bad class.
  void add(Index index, int label);

  Index num_nodes() const { return static_cast<Index>(mask_.size()); }
  int num_classes() const { return num_classes_; }
  const std::vector<Index>& labeled() const { return labeled_; }
  const std::vector<int>& observed() const { return observed_; }
  bool is_labeled(Index i) const { return mask_.at(i) != 0; }
  std::vector<Index> unlabeled() const;
  // One |L| x C matrix, row r = e_{observed[r]}.
  Matrix one_hot() const;

 private:
  std::vector<Index> labeled_;
  std::vector<int> observed_;
  std::vector<char> mask_;
  int num_classes_;
};

struct NodeFunction {
  Matrix u;  // N x C
  double tau = 0.0;
  double residual = 0.0;  // worst column relative residual
  Index iterations = 0;   // worst column CG iterations
};

struct SolveOptions {
  CgOptions cg;
  // Previous u (N x C) used as the CG starting point on unlabeled rows.
  const Matrix* warm_start = nullptr;
};

// Solves ((L_g)_UU + tau I) u_U = (A_g)_UL Y column by column, labeled rows
// set to Y. Throws EmptyLabeledSet, InvalidArgument and SolverDiverged.
NodeFunction solve_pwll(const SimilarityGraph& graph, const NodeWeights& gamma,
                        const LabelState& labels, double tau,
                        const SolveOptions& options = {});

// Row argmax, ties to the lowest class.
std::vector<int> classify(const Matrix& u);

}  // namespace pwll
