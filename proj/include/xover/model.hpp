#pragma once

#include "xover/linalg.hpp"
#include "xover/rational.hpp"
#include "xover/types.hpp"

namespace xover {

/// Row index of the effect pair (u, v) in the t(t+1)-dimensional effect
/// vector: u = 1..t is the current treatment, v = 0..t the previous one
/// (0 = fictitious pre-period state). Pairs are in lexicographic order, so
/// the index is (u-1)*(t+1) + v. This ordering is part of the public
/// contract of every matrix below.
inline int pair_index(int u, int v, int t) { return (u - 1) * (t + 1) + v; }

/// 0/1 period-by-effect incidence matrix of a sequence, k x t(t+1).
/// Row j carries a single 1 at the pair (s_j, s_{j-1}), with s_0 = 0.
MatrixXd design_matrix(const TreatmentSequence& s);
RatMat design_matrix_exact(const TreatmentSequence& s);

/// Q_k = I - J/k, the projection removing the per-subject mean.
MatrixXd centering_matrix(int k);
RatMat centering_matrix_exact(int k);

/// Fixed 0/1 selector K (t(t+1) x t) picking the self-preceded pairs (w, w).
MatrixXd selector_matrix(int t);

/// Information matrix for the full effect vector, dimension t(t+1).
struct InfoMatrixXi {
  MatrixXd m;
  int t = 0;
  int k = 0;
  double scale = 1.0;  // subject count it was accumulated over
};

/// Information matrix for the total effects, t x t, zero row/column sums.
struct InfoMatrixPhi {
  MatrixXd m;
  int t = 0;
};

/// Joint information matrix for (effects, period effects), dimension
/// t(t+1) + k; the lower-right block equals scale * Q_k.
struct PeriodInfoMatrix {
  MatrixXd m;
  int t = 0;
  int k = 0;
  double scale = 1.0;
};

InfoMatrixXi info_xi_sequence(const TreatmentSequence& s);
RatMat info_xi_sequence_exact(const TreatmentSequence& s);

InfoMatrixXi info_xi_design(const ExactDesign& d);
InfoMatrixXi info_xi_design(const ApproximateDesign& d);

/// Reduce an effect information matrix to the total-effect information
/// matrix: the generalized Schur complement of the non-self-pair block,
/// which realizes the Loewner-minimal L'CL over L'K = I.
InfoMatrixPhi info_phi(const InfoMatrixXi& c, double psd_tol = 1e-9);

PeriodInfoMatrix info_theta_design(const ExactDesign& d);
PeriodInfoMatrix info_theta_design(const ApproximateDesign& d);

/// Same reduction applied to the period-effects model.
InfoMatrixPhi info_phi_periods(const PeriodInfoMatrix& c, double psd_tol = 1e-9);

InfoMatrixPhi info_phi(const ExactDesign& d);
InfoMatrixPhi info_phi(const ApproximateDesign& d);
InfoMatrixPhi info_phi_periods(const ExactDesign& d);
InfoMatrixPhi info_phi_periods(const ApproximateDesign& d);

}  // namespace xover
