#include "xover/model.hpp"

#include <stdexcept>

namespace xover {

MatrixXd design_matrix(const TreatmentSequence& s) {
  const int k = s.k(), t = s.t();
  MatrixXd x = MatrixXd::Zero(k, t * (t + 1));
  int prev = 0;
  for (int j = 1; j <= k; ++j) {
    x(j - 1, pair_index(s.at(j), prev, t)) = 1.0;
    prev = s.at(j);
  }
  return x;
}

RatMat design_matrix_exact(const TreatmentSequence& s) {
  const int k = s.k(), t = s.t();
  RatMat x(k, t * (t + 1));
  int prev = 0;
  for (int j = 1; j <= k; ++j) {
    x(j - 1, pair_index(s.at(j), prev, t)) = 1;
    prev = s.at(j);
  }
  return x;
}

MatrixXd centering_matrix(int k) {
  if (k < 1) throw std::invalid_argument("centering_matrix: k must be >= 1");
  return MatrixXd::Identity(k, k) - MatrixXd::Constant(k, k, 1.0 / k);
}

RatMat centering_matrix_exact(int k) {
  if (k < 1) throw std::invalid_argument("centering_matrix: k must be >= 1");
  RatMat q(k, k);
  Rat inv(-1, k);
  inv.canonicalize();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) q(i, j) = (i == j) ? Rat(k - 1, k) : inv;
  return q;
}

MatrixXd selector_matrix(int t) {
  MatrixXd k = MatrixXd::Zero(t * (t + 1), t);
  for (int w = 1; w <= t; ++w) k(pair_index(w, w, t), w - 1) = 1.0;
  return k;
}

InfoMatrixXi info_xi_sequence(const TreatmentSequence& s) {
  MatrixXd x = design_matrix(s);
  MatrixXd q = centering_matrix(s.k());
  return {x.transpose() * q * x, s.t(), s.k(), 1.0};
}

RatMat info_xi_sequence_exact(const TreatmentSequence& s) {
  RatMat x = design_matrix_exact(s);
  return x.transpose() * centering_matrix_exact(s.k()) * x;
}

InfoMatrixXi info_xi_design(const ExactDesign& d) {
  const int dim = d.t() * (d.t() + 1);
  MatrixXd sum = MatrixXd::Zero(dim, dim);
  for (const auto& row : d.rows) sum += info_xi_sequence(row).m;
  return {std::move(sum), d.t(), d.k(), double(d.n())};
}

InfoMatrixXi info_xi_design(const ApproximateDesign& d) {
  const int dim = d.t * (d.t + 1);
  MatrixXd sum = MatrixXd::Zero(dim, dim);
  for (const auto& [s, p] : d.proportions)
    if (p != 0.0) sum += p * info_xi_sequence(s).m;
  return {d.nominal_n * sum, d.t, d.k, d.nominal_n};
}

namespace {

/// Schur complement of `full` onto the coordinates `keep` (complement
/// eliminated through the spectral pseudoinverse).
MatrixXd schur_onto(const MatrixXd& full, const std::vector<int>& keep) {
  const int n = int(full.rows());
  std::vector<char> is_kept(n, 0);
  for (int i : keep) is_kept[i] = 1;
  std::vector<int> rest;
  rest.reserve(n - keep.size());
  for (int i = 0; i < n; ++i)
    if (!is_kept[i]) rest.push_back(i);

  const int nd = int(keep.size()), nr = int(rest.size());
  MatrixXd cdd(nd, nd), cdr(nd, nr), crr(nr, nr);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) cdd(i, j) = full(keep[i], keep[j]);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nr; ++j) cdr(i, j) = full(keep[i], rest[j]);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) crr(i, j) = full(rest[i], rest[j]);

  return cdd - cdr * pseudo_inverse(crr) * cdr.transpose();
}

std::vector<int> self_pair_indices(int t) {
  std::vector<int> keep(t);
  for (int w = 1; w <= t; ++w) keep[w - 1] = pair_index(w, w, t);
  return keep;
}

}  // namespace

InfoMatrixPhi info_phi(const InfoMatrixXi& c, double psd_tol) {
  require_symmetric_psd(c.m, psd_tol, "info_phi");
  return {schur_onto(c.m, self_pair_indices(c.t)), c.t};
}

PeriodInfoMatrix info_theta_design(const ExactDesign& d) {
  const int t = d.t(), k = d.k(), dim = t * (t + 1);
  MatrixXd q = centering_matrix(k);
  MatrixXd m = MatrixXd::Zero(dim + k, dim + k);
  for (const auto& row : d.rows) {
    MatrixXd x = design_matrix(row);
    MatrixXd qx = q * x;
    m.topLeftCorner(dim, dim) += x.transpose() * qx;
    m.topRightCorner(dim, k) += qx.transpose();
    m.bottomLeftCorner(k, dim) += qx;
    m.bottomRightCorner(k, k) += q;
  }
  return {std::move(m), t, k, double(d.n())};
}

PeriodInfoMatrix info_theta_design(const ApproximateDesign& d) {
  const int t = d.t, k = d.k, dim = t * (t + 1);
  MatrixXd q = centering_matrix(k);
  MatrixXd m = MatrixXd::Zero(dim + k, dim + k);
  for (const auto& [s, p] : d.proportions) {
    if (p == 0.0) continue;
    MatrixXd x = design_matrix(s);
    MatrixXd qx = q * x;
    m.topLeftCorner(dim, dim) += p * (x.transpose() * qx);
    m.topRightCorner(dim, k) += p * qx.transpose();
    m.bottomLeftCorner(k, dim) += p * qx;
    m.bottomRightCorner(k, k) += p * q;
  }
  return {d.nominal_n * m, t, k, d.nominal_n};
}

InfoMatrixPhi info_phi_periods(const PeriodInfoMatrix& c, double psd_tol) {
  require_symmetric_psd(c.m, psd_tol, "info_phi_periods");
  return {schur_onto(c.m, self_pair_indices(c.t)), c.t};
}

InfoMatrixPhi info_phi(const ExactDesign& d) { return info_phi(info_xi_design(d)); }
InfoMatrixPhi info_phi(const ApproximateDesign& d) { return info_phi(info_xi_design(d)); }
InfoMatrixPhi info_phi_periods(const ExactDesign& d) {
  return info_phi_periods(info_theta_design(d));
}
InfoMatrixPhi info_phi_periods(const ApproximateDesign& d) {
  return info_phi_periods(info_theta_design(d));
}

}  // namespace xover
