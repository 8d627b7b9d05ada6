#pragma once

#include "xover/model.hpp"
#include "xover/optimizer.hpp"
#include "xover/types.hpp"

namespace xover {

struct EfficiencyReport {
  double trace_eff = 0.0;
  double a_eff = 0.0;
  double d_eff = 0.0;
  double e_eff = 0.0;
  bool completely_symmetric = false;
  bool estimable = false;
  std::vector<double> contrast_eigenvalues;  // t-1 values, ascending
};

/// Efficiency of an exact design against the optimal per-subject value h*.
/// Contrast eigenvalues are taken on the orthocomplement of the all-ones
/// vector, so the structural zero eigenvalue never enters.
EfficiencyReport evaluate(const ExactDesign& d, const MaximinSolution& optimum,
                          bool with_periods = false);

/// Same, with the reference value supplied directly (n * h_star known).
EfficiencyReport evaluate_against(const ExactDesign& d, double h_star,
                                  bool with_periods = false);

struct PeriodModelComparison {
  double trace_plain = 0.0;
  double trace_periods = 0.0;
  bool equal = false;  // elementwise within 1e-8 relative
};

PeriodModelComparison compare_period_models(const ExactDesign& d);

}  // namespace xover
