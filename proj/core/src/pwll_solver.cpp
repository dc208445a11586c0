#include "pwll/pwll_solver.hpp"

#include <algorithm>

#include "pwll/errors.hpp"

namespace pwll {

LabelState::LabelState(Index num_nodes, int num_classes)
    : mask_(num_nodes, 0), num_classes_(num_classes) {
  if (num_classes < 2) throw InvalidArgument("need at least two classes");
}

void LabelState::add(Index index, int label) {
  if (index >= mask_.size()) {
    throw InvalidArgument("label index " + std::to_string(index) +
                          " out of range");
  }
  if (label < 0 || label >= num_classes_) {
    throw OracleOutOfRange(index, label, num_classes_);
  }
  if (mask_[index]) {
    throw InvalidArgument("index " + std::to_string(index) +
                          " is already labeled");
  }
  mask_[index] = 1;
  labeled_.push_back(index);
  observed_.push_back(label);
}

std::vector<Index> LabelState::unlabeled() const {
  std::vector<Index> out;
  out.reserve(mask_.size() - labeled_.size());
  for (Index i = 0; i < mask_.size(); ++i) {
    if (!mask_[i]) out.push_back(i);
  }
  return out;
}

Matrix LabelState::one_hot() const {
  Matrix y = Matrix::Zero(static_cast<Eigen::Index>(labeled_.size()),
                          num_classes_);
  for (Index r = 0; r < labeled_.size(); ++r) {
    y(static_cast<Eigen::Index>(r), observed_[r]) = 1.0;
  }
  return y;
}

NodeFunction solve_pwll(const SimilarityGraph& graph, const NodeWeights& gamma,
                        const LabelState& labels, double tau,
                        const SolveOptions& options) {
  if (labels.labeled().empty()) throw EmptyLabeledSet();
  const Index n = graph.num_nodes();
  if (labels.num_nodes() != n) {
    throw InvalidArgument("label state size does not match the graph");
  }
  if (!(tau >= 0.0)) throw InvalidArgument("tau must be nonnegative");
  const int c = labels.num_classes();

  const SparseOperator op = assemble_laplacian(graph, gamma.gamma);

  // Boundary data extended by zero, then b = -L Y~ restricted to U.
  Matrix y_ext = Matrix::Zero(static_cast<Eigen::Index>(n), c);
  const auto& lab = labels.labeled();
  for (Index r = 0; r < lab.size(); ++r) {
    y_ext(static_cast<Eigen::Index>(lab[r]), labels.observed()[r]) = 1.0;
  }
  std::vector<char> free(n, 1);
  for (Index i : lab) free[i] = 0;

  Matrix rhs = -(op.laplacian() * y_ext);
  for (Index i : lab) rhs.row(static_cast<Eigen::Index>(i)).setZero();

  Matrix x0;
  if (options.warm_start != nullptr && options.warm_start->size() != 0) {
    const Matrix& w = *options.warm_start;
    if (w.rows() != static_cast<Eigen::Index>(n) || w.cols() != c) {
      throw InvalidArgument("warm start has wrong shape");
    }
    x0 = w;
    for (Index i : lab) x0.row(static_cast<Eigen::Index>(i)).setZero();
  }

  NodeFunction out;
  out.tau = tau;
  if (lab.size() == n) {
    out.u = y_ext;
    return out;
  }

  CgReport report;
  const RestrictedShiftedOperator a(op, free, tau);
  Matrix u = cg_solve(a, rhs, options.cg, x0, &report);
  for (Index i : lab) {
    u.row(static_cast<Eigen::Index>(i)) = y_ext.row(static_cast<Eigen::Index>(i));
  }
  out.u = std::move(u);
  for (double r : report.residuals) out.residual = std::max(out.residual, r);
  for (Index it : report.iterations) out.iterations = std::max(out.iterations, it);
  return out;
}

std::vector<int> classify(const Matrix& u) {
  std::vector<int> out(static_cast<Index>(u.rows()), 0);
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    int best = 0;
    for (Eigen::Index c = 1; c < u.cols(); ++c) {
      if (u(i, c) > u(i, best)) best = static_cast<int>(c);
    }
    out[static_cast<Index>(i)] = best;
  }
  return out;
}

}  // namespace pwll
