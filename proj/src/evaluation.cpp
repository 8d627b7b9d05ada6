#include "xover/evaluation.hpp"

#include <cmath>
#include <stdexcept>

namespace xover {

EfficiencyReport evaluate_against(const ExactDesign& d, double h_star,
                                  bool with_periods) {
  InfoMatrixPhi c = with_periods ? info_phi_periods(d) : info_phi(d);
  const int t = d.t();
  const double vstar = d.n() * h_star / (t - 1);

  MatrixXd basis = contrast_basis(t);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(basis.transpose() * c.m * basis);
  VectorXd lam = es.eigenvalues();

  EfficiencyReport rep;
  rep.contrast_eigenvalues.assign(lam.data(), lam.data() + lam.size());
  rep.completely_symmetric = is_completely_symmetric(c.m);
  rep.estimable = lam.minCoeff() > 1e-9 * vstar;
  if (!rep.estimable) return rep;  // all efficiencies stay 0

  double harm = 0.0, log_sum = 0.0;
  for (int i = 0; i < lam.size(); ++i) {
    harm += 1.0 / lam[i];
    log_sum += std::log(lam[i]);
  }
  rep.trace_eff = lam.sum() / ((t - 1) * vstar);
  rep.a_eff = ((t - 1) / harm) / vstar;
  rep.d_eff = std::exp(log_sum / (t - 1)) / vstar;
  rep.e_eff = lam.minCoeff() / vstar;
  return rep;
}

EfficiencyReport evaluate(const ExactDesign& d, const MaximinSolution& optimum,
                          bool with_periods) {
  if (d.k() != optimum.k || d.t() != optimum.t)
    throw std::invalid_argument("evaluate: design and optimum disagree on (k, t)");
  return evaluate_against(d, optimum.h_star, with_periods);
}

PeriodModelComparison compare_period_models(const ExactDesign& d) {
  InfoMatrixPhi plain = info_phi(d);
  InfoMatrixPhi withp = info_phi_periods(d);
  PeriodModelComparison cmp;
  cmp.trace_plain = plain.m.trace();
  cmp.trace_periods = withp.m.trace();
  double scale = std::max(plain.m.cwiseAbs().maxCoeff(), 1e-300);
  cmp.equal = ((plain.m - withp.m).cwiseAbs().maxCoeff() <= 1e-8 * scale);
  return cmp;
}

}  // namespace xover
