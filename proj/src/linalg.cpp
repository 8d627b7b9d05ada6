#include "xover/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace xover {

MatrixXd pseudo_inverse(const MatrixXd& sym, double cutoff_rel) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym);
  const VectorXd& ev = es.eigenvalues();
  double cutoff = cutoff_rel * std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  VectorXd inv = VectorXd::Zero(ev.size());
  for (int i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i]) > cutoff) inv[i] = 1.0 / ev[i];
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

VectorXd lstsq(const MatrixXd& a, const VectorXd& b, double rcond) {
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rcond);
  return svd.solve(b);
}

MatrixXd contrast_basis(int t) {
  MatrixXd v = MatrixXd::Zero(t, t - 1);
  for (int j = 1; j < t; ++j) {
    for (int i = 0; i < j; ++i) v(i, j - 1) = 1.0;
    v(j, j - 1) = -double(j);
    v.col(j - 1) /= v.col(j - 1).norm();
  }
  return v;
}

bool is_completely_symmetric(const MatrixXd& c, double tol) {
  const int n = int(c.rows());
  if (n != c.cols()) return false;
  if (n == 1) return true;
  double diag_mean = c.diagonal().mean();
  double off_mean = (c.sum() - c.diagonal().sum()) / (double(n) * (n - 1));
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(c(i, j) - (i == j ? diag_mean : off_mean)));
  double scale = std::max(c.cwiseAbs().maxCoeff(), 1e-300);
  return dev <= tol * scale;
}

void require_symmetric_psd(const MatrixXd& c, double tol, const char* what) {
  double scale = std::max(c.cwiseAbs().maxCoeff(), 1.0);
  if ((c - c.transpose()).cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument(std::string(what) + ": matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (c + c.transpose()),
                                             Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol * scale)
    throw std::invalid_argument(std::string(what) + ": matrix not positive semidefinite");
}

}  // namespace xover
