#include "pwll/reweighting.hpp"

#include "pwll/errors.hpp"

namespace pwll {

Vector poisson_source(Index n, const std::vector<Index>& labeled) {
  Vector f = Vector::Constant(static_cast<Eigen::Index>(n),
                              -static_cast<double>(labeled.size()) /
                                  static_cast<double>(n));
  for (Index i : labeled) {
    if (i >= n) throw InvalidArgument("labeled index out of range");
    f[static_cast<Eigen::Index>(i)] += 1.0;
  }
  return f;
}

NodeWeights solve_gamma(const SimilarityGraph& graph,
                        const std::vector<Index>& labeled,
                        const CgOptions& options,
                        const Vector& warm_start) {
  if (labeled.empty()) throw EmptyLabeledSet();
  const Index n = graph.num_nodes();
  const Vector f = poisson_source(n, labeled);

  const SparseOperator op = assemble_laplacian(graph);
  CgOptions opts = options;
  opts.project_mean_zero = true;
  const Matrix w = cg_solve(MatrixOperator(op.laplacian()), f, opts,
                          warm_start.size() != 0 ? Matrix(warm_start) : Matrix());

  NodeWeights out;
  out.raw = w.col(0);
  out.gamma = (out.raw.array().max(0.0) + 1.0).matrix();
  return out;
}

}  // namespace pwll
