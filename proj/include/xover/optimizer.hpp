#pragma once

#include "xover/orbits.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace xover {

struct SolverSettings {
  double active_rtol = 1e-7;     // Step 2: relative activity tolerance
  double gap_rtol = 1e-10;       // certification duality-gap tolerance
  double kkt_tol = 1e-10;        // stationarity residual target
  int max_iters = 10000;         // iteration cap for the convex phase
  std::int64_t den_cap = 1000000;  // denominator cap for exact reconstruction
  bool want_exact = false;       // attempt rational reconstruction
  unsigned fallback_seed = 1u;   // multistart seed for the subgradient fallback
};

struct Certificate {
  double max_inactive_gap = 0.0;  // max_l h_l(g*) - h* over non-active classes
  double kkt_residual = 0.0;      // |sum_l pi_l grad h_l(g*)|
  double min_proportion = 0.0;
  double resolve_gap = 0.0;       // |min_g sum pi*_l h_l(g) - h*|
  double sum_error = 0.0;         // |sum pi - 1|
  bool dominance_ok = false;
  bool stationarity_ok = false;
  bool nonnegativity_ok = false;
  bool resolve_ok = false;
  std::string failure;  // empty when passed

  bool passed() const { return failure.empty(); }
};

struct ExactSolution {
  std::array<Rat, 5> gamma{};
  Rat h_star = 0;
  std::vector<std::pair<EquivalenceClass, Rat>> proportions;
  bool verified = false;  // all exact optimality checks passed
};

struct ProportionSolution {
  std::vector<double> pi;    // aligned with the active-class list
  double residual = 0.0;
  int degeneracy_dim = 0;    // dimension of the affine solution space
};

struct MaximinSolution {
  int k = 0;
  int t = 0;
  GammaPoint gamma_star;
  double h_star = 0.0;
  /// Value-active classes with their proportions (zero-weight touching
  /// classes included, proportion 0).
  std::vector<std::pair<EquivalenceClass, double>> active;
  ProportionSolution proportions;
  Certificate certificate;
  std::optional<ExactSolution> exact;
  SolverSettings settings;
};

/// Step 1: minimize max_l h_l over the reduction coefficients. The returned
/// value is certified stationary to settings.kkt_tol; throws on
/// non-convergence (the objective is convex, so that indicates a bug).
std::pair<GammaPoint, double> minimize_hstar(
    const std::vector<CoefficientTable>& tables,
    const SolverSettings& settings = {});

/// Step 2: classes with h_l(g*) >= h* (1 - rtol).
std::vector<int> active_classes(const std::vector<CoefficientTable>& tables,
                                const GammaPoint& gamma_star, double h_star,
                                double rtol = 1e-7);

/// Step 3: nonnegative weights solving the stationarity system on the active
/// set, summing to 1; minimum-Euclidean-norm solution when degenerate.
ProportionSolution solve_proportions(const std::vector<CoefficientTable>& active,
                                     const GammaPoint& gamma_star);

/// Step 4 checks: dominance over every class, stationarity, nonnegativity,
/// and agreement of the re-solved inner minimum with h*.
Certificate certify(const std::vector<CoefficientTable>& all_tables,
                    const std::vector<int>& active_idx,
                    const std::vector<double>& pi, const GammaPoint& gamma_star,
                    double h_star, const SolverSettings& settings = {});

/// Small-denominator rational reconstruction + exact verification.
ExactSolution rationalize_solution(const std::vector<CoefficientTable>& all_tables,
                                   const std::vector<int>& active_idx,
                                   const std::vector<double>& pi,
                                   const GammaPoint& gamma_star, double h_star,
                                   std::int64_t den_cap = 1000000);

/// min_g h_l(g) / h_star, the best trace share a single class can achieve.
double single_class_efficiency(const CoefficientTable& tbl, double h_star);

/// The full Step 1-4 pipeline for (k, t).
MaximinSolution solve_maximin(int k, int t, const SolverSettings& settings = {});

/// Same pipeline on a caller-supplied class list.
MaximinSolution solve_maximin(const std::vector<CoefficientTable>& tables,
                              const SolverSettings& settings = {});

}  // namespace xover
