#pragma once

#include "xover/types.hpp"

#include <cstdint>
#include <vector>

namespace xover {

/// Orbit of a sequence under relabelling of the treatments, canonically
/// encoded as a restricted growth string: the first occurrence of each new
/// label is the smallest unused label, starting at 1.
struct EquivalenceClass {
  std::vector<int> canonical;
  int block_count = 0;  // number of distinct labels

  int k() const { return static_cast<int>(canonical.size()); }
  std::string str() const;

  /// The canonical representative as a sequence over 1..t.
  TreatmentSequence representative(int t) const;

  bool operator==(const EquivalenceClass& o) const { return canonical == o.canonical; }
  bool operator<(const EquivalenceClass& o) const { return canonical < o.canonical; }
};

EquivalenceClass canonicalize(const TreatmentSequence& s);
EquivalenceClass class_from_string(const std::string& text);

/// All restricted growth strings of length k with at most t distinct labels,
/// in lexicographic order. The count is the Bell number B_k when t >= k,
/// otherwise the partial Stirling sum.
std::vector<EquivalenceClass> enumerate_classes(int k, int t);

/// Sum over m <= min(k,t) of the Stirling numbers of the second kind S(k,m).
std::uint64_t class_count(int k, int t);

}  // namespace xover
