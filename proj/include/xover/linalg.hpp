#pragma once

#include <Eigen/Dense>

namespace xover {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Vector5d = Eigen::Matrix<double, 5, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Vector6d = Eigen::Matrix<double, 6, 1>;

/// Spectral pseudoinverse of a symmetric matrix. Eigenvalues with magnitude
/// below cutoff_rel * max(|lambda|_max, 1) are treated as zero.
MatrixXd pseudo_inverse(const MatrixXd& sym, double cutoff_rel = 1e-10);

/// Least-squares / minimum-norm solve via SVD (works on singular systems).
VectorXd lstsq(const MatrixXd& a, const VectorXd& b, double rcond = 1e-12);

/// Orthonormal basis of the orthogonal complement of the all-ones vector
/// in R^t, as the columns of a t x (t-1) matrix (Helmert contrasts).
MatrixXd contrast_basis(int t);

/// Max deviation of the diagonal from its mean and of the off-diagonal from
/// its mean, relative to the max-abs entry.
bool is_completely_symmetric(const MatrixXd& c, double tol = 1e-9);

/// Relative check that a matrix is symmetric psd (used on input validation).
void require_symmetric_psd(const MatrixXd& c, double tol, const char* what);

}  // namespace xover
