#pragma once

#include "xover/classes.hpp"
#include "xover/types.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace xover {

/// Arithmetic in GF(p^n) for prime-power orders up to 32. Elements are
/// indices 0..q-1 encoding polynomial coefficient vectors over GF(p) in
/// ascending order (index = sum c_i p^i); index 0 is the zero element.
class GaloisField {
public:
  explicit GaloisField(int order);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return n_; }
  /// Coefficients of the monic irreducible modulus (constant term first,
  /// without the leading 1); empty for prime fields.
  const std::vector<int>& modulus() const { return irreducible_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;

  static bool supported_order(int q);

private:
  int p_, n_, q_;
  std::vector<int> irreducible_;
};

using Triplet = std::array<int, 3>;

/// t(t-1) triplets forming an orthogonal array of type I and strength two:
/// each ordered pair of distinct treatments occurs exactly once in each
/// ordered pair of positions.
struct StartingDesign {
  std::vector<Triplet> triplets;
  int t = 0;
  std::string method;           // "oa" or "gf"
  Triplet seed{0, 0, 0};        // gf only
  std::vector<int> polynomial;  // gf only: irreducible modulus coefficients
};

/// Verify the type-I strength-two property exhaustively.
bool is_orthogonal_array(const StartingDesign& sd);

/// Odd t: the triplets (u, u+v, u+2v) mod t, shifted to labels 1..t.
StartingDesign oa_triplets_odd(int t);

/// Even t: the odd construction on t-1 symbols with each stepped triplet
/// (u, u+1, u+2) replaced by three triplets introducing the new treatment t.
StartingDesign oa_triplets_even(int t);

/// Convenience dispatch on parity.
StartingDesign oa_triplets(int t);

/// Affine orbit {(a x + b, a y + b, a z + b) : a != 0} of a seed triplet of
/// distinct field elements; t must be a supported prime power. Seed entries
/// are treatment labels: label i <-> field element of index i for i < t,
/// and label t <-> the zero element.
StartingDesign gf_triplets(int t, const Triplet& seed_labels = {1, 2, 3});

/// Substitute the triplet entries for the three labels of the pattern.
TreatmentSequence expand_triplet(const Triplet& tr,
                                 const EquivalenceClass& pattern, int t);

enum class Method { oa, gf };

/// The t(t-1)-subject design obtained by expanding every triplet through the
/// pattern; subjects in lexicographic triplet order.
ExactDesign build_reduced_design(int t, const EquivalenceClass& pattern,
                                 Method method,
                                 const Triplet& seed_labels = {1, 2, 3});

StartingDesign starting_design(int t, Method method,
                               const Triplet& seed_labels = {1, 2, 3});

}  // namespace xover
