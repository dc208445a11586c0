#include "pwll/cg.hpp"

#include <cmath>

#include "pwll/errors.hpp"

namespace pwll {

void MatrixOperator::apply(const Vector& x, Vector& y) const {
  y.noalias() = matrix_ * x;
}

Vector MatrixOperator::diagonal() const { return matrix_.diagonal(); }

RestrictedShiftedOperator::RestrictedShiftedOperator(
    const SparseOperator& op, const std::vector<char>& free_mask, double tau)
    : op_(op), free_(free_mask), tau_(tau) {
  if (free_mask.size() != op.size()) {
    throw InvalidArgument("free mask length does not match the operator");
  }
  if (!(tau >= 0.0)) throw InvalidArgument("tau must be nonnegative");
}

void RestrictedShiftedOperator::apply(const Vector& x, Vector& y) const {
  const SparseMatrix& l = op_.laplacian();
  y.resize(x.size());
  for (Eigen::Index r = 0; r < l.outerSize(); ++r) {
    if (!free_[static_cast<Index>(r)]) {
      y[r] = x[r];
      continue;
    }
    double acc = tau_ * x[r];
    for (SparseMatrix::InnerIterator it(l, r); it; ++it) {
      if (free_[static_cast<Index>(it.col())]) acc += it.value() * x[it.col()];
    }
    y[r] = acc;
  }
}

Vector RestrictedShiftedOperator::diagonal() const {
  Vector d = op_.laplacian().diagonal();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d[i] = free_[static_cast<Index>(i)] ? d[i] + tau_ : 1.0;
  }
  return d;
}

namespace {

void RemoveMean(Vector& v) { v.array() -= v.mean(); }

}  // namespace

Matrix cg_solve(const LinearOperator& op, const Matrix& rhs,
                const CgOptions& options, const Matrix& x0, CgReport* report) {
  const Index n = op.size();
  if (static_cast<Index>(rhs.rows()) != n) {
    throw InvalidArgument("right-hand side has wrong number of rows");
  }
  if (x0.size() != 0 && (x0.rows() != rhs.rows() || x0.cols() != rhs.cols())) {
    throw InvalidArgument("warm start has wrong shape");
  }
  const Index max_iter =
      options.max_iterations > 0 ? options.max_iterations : 10 * n;

  Vector inv_diag = op.diagonal();
  for (Eigen::Index i = 0; i < inv_diag.size(); ++i) {
    inv_diag[i] = inv_diag[i] > 0.0 ? 1.0 / inv_diag[i] : 1.0;
  }

  Matrix solution(rhs.rows(), rhs.cols());
  std::vector<Index> iterations(static_cast<Index>(rhs.cols()), 0);
  std::vector<double> residuals(static_cast<Index>(rhs.cols()), 0.0);
  bool failed = false;

  Vector x, r, z, p, q;
  for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
    Vector b = rhs.col(c);
    if (options.project_mean_zero) RemoveMean(b);
    const double b_norm = b.norm();
    const auto col = static_cast<Index>(c);

    if (b_norm == 0.0) {
      solution.col(c).setZero();
      continue;
    }

    x = x0.size() != 0 ? Vector(x0.col(c)) : Vector::Zero(rhs.rows());
    op.apply(x, q);
    r = b - q;
    if (options.project_mean_zero) RemoveMean(r);
    double r_norm = r.norm();

    Index it = 0;
    if (r_norm > options.tolerance * b_norm) {
      z = inv_diag.cwiseProduct(r);
      p = z;
      double rz = r.dot(z);
      while (it < max_iter) {
        op.apply(p, q);
        const double pq = p.dot(q);
        if (!(pq > 0.0)) break;
        const double alpha = rz / pq;
        x.noalias() += alpha * p;
        r.noalias() -= alpha * q;
        if (options.project_mean_zero) RemoveMean(r);
        ++it;
        r_norm = r.norm();
        if (r_norm <= options.tolerance * b_norm) break;
        z = inv_diag.cwiseProduct(r);
        const double rz_next = r.dot(z);
        p = z + (rz_next / rz) * p;
        rz = rz_next;
      }
    }

    if (options.project_mean_zero) RemoveMean(x);
    // The recursive residual drifts from the true one; report the true one.
    op.apply(x, q);
    Vector true_r = b - q;
    if (options.project_mean_zero) RemoveMean(true_r);
    residuals[col] = true_r.norm() / b_norm;
    iterations[col] = it;
    // A little slack over tol for rounding in the true residual.
    if (!(residuals[col] <= 10.0 * options.tolerance)) failed = true;
    solution.col(c) = x;
  }

  if (report != nullptr) {
    report->iterations = iterations;
    report->residuals = residuals;
  }
  if (failed) {
    Index worst = 0;
    for (Index v : iterations) worst = std::max(worst, v);
    throw SolverDiverged(residuals, options.tolerance, worst);
  }
  return solution;
}

}  // namespace pwll
