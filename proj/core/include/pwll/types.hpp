#pragma once

#include <cstddef>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace pwll {

using Index = std::size_t;

// N x d point coordinates, one row per point.
using FeatureMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
// N x C class-score matrix.
using Matrix = Eigen::MatrixXd;

}  // namespace pwll
