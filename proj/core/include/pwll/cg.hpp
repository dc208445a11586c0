#pragma once

#include <vector>

#include "pwll/graph.hpp"
#include "pwll/types.hpp"

namespace pwll {

// Symmetric operator interface consumed by cg_solve.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual Index size() const = 0;
  virtual void apply(const Vector& x, Vector& y) const = 0;
  // Diagonal used for Jacobi preconditioning.
  virtual Vector diagonal() const = 0;
};

class MatrixOperator final : public LinearOperator {
 public:
  explicit MatrixOperator(const SparseMatrix& matrix) : matrix_(matrix) {}
  Index size() const override { return static_cast<Index>(matrix_.rows()); }
  void apply(const Vector& x, Vector& y) const override;
  Vector diagonal() const override;

 private:
  const SparseMatrix& matrix_;
};

// (L)_UU + tau I acting on full-length vectors: entries outside the free set
// U are held at zero, so the operator is the identity-padded restriction.
class RestrictedShiftedOperator final : public LinearOperator {
 public:
  RestrictedShiftedOperator(const SparseOperator& op,
                            const std::vector<char>& free_mask, double tau);
  Index size() const override { return op_.size(); }
  void apply(const Vector& x, Vector& y) const override;
  Vector diagonal() const override;

 private:
  const SparseOperator& op_;
  const std::vector<char>& free_;
  double tau_;
};

struct CgOptions {
  double tolerance = 1e-9;  // relative: |r| <= tol * |b| per column
  Index max_iterations = 0;  // 0 selects 10 * N
  // For singular systems whose kernel is the constants: keeps residuals
  // mean-zero and returns the mean-zero solution.
  bool project_mean_zero = false;
};

struct CgReport {
  std::vector<Index> iterations;
  std::vector<double> residuals;  // final relative residual per column
};

// Column-wise Jacobi-preconditioned conjugate gradient. x0, when non-empty,
// warm-starts every column. Throws SolverDiverged when any column misses the
// tolerance within the iteration budget.
Matrix cg_solve(const LinearOperator& op, const Matrix& rhs,
                const CgOptions& options = {}, const Matrix& x0 = Matrix(),
                CgReport* report = nullptr);

}  // namespace pwll
