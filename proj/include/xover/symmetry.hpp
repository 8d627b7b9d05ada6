#pragma once

#include "xover/classes.hpp"
#include "xover/types.hpp"

#include <cstdint>
#include <vector>

namespace xover {

/// A relabelling of treatments: perm[u-1] is the image of label u.
using Permutation = std::vector<int>;

TreatmentSequence apply_permutation(const TreatmentSequence& s,
                                    const Permutation& perm);

/// Orbit-average of the proportions over all t! relabellings. The result is
/// symmetric (class-constant); enumerating each orbit keeps this polynomial
/// in the orbit sizes rather than in t!.
ApproximateDesign symmetrize(const ApproximateDesign& d);

/// All distinct label images of the class representative, one subject each;
/// n = t(t-1)...(t-m+1) for a class on m labels. Deterministic row order.
ExactDesign symmetric_design_from_class(const EquivalenceClass& cls, int t);

/// View an exact design as sequence proportions (multiples of 1/n).
ApproximateDesign as_approximate(const ExactDesign& d);

struct AutomorphismReport {
  std::uint64_t order = 0;
  bool transitive = false;
  bool doubly_transitive = false;
  std::vector<Permutation> generators;
};

/// Brute-force search over S_t for relabellings fixing the design up to a
/// subject permutation (multiset row equality). Rejects t > 8.
AutomorphismReport automorphism_group(const ExactDesign& d);

struct StrongBalanceReport {
  bool first_period_equal = false;    // (i)
  bool self_precedence_equal = false; // (ii)
  bool pair_precedence_equal = false; // (iii)
  bool strongly_balanced = false;
};

StrongBalanceReport check_strong_balance(const ExactDesign& d);
StrongBalanceReport check_strong_balance(const ApproximateDesign& d,
                                         double tol = 1e-9);

}  // namespace xover
