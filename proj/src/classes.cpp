#include "xover/classes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xover {

std::string EquivalenceClass::str() const {
  std::ostringstream os;
  for (int v : canonical) os << v;  // block count never exceeds k <= 9 in practice
  if (block_count > 9) {
    os.str("");
    for (size_t i = 0; i < canonical.size(); ++i) {
      if (i) os << ',';
      os << canonical[i];
    }
  }
  return os.str();
}

TreatmentSequence EquivalenceClass::representative(int t) const {
  if (block_count > t)
    throw std::invalid_argument("class uses more labels than t provides");
  return TreatmentSequence(canonical, t);
}

EquivalenceClass canonicalize(const TreatmentSequence& s) {
  std::vector<int> relabel(s.t() + 1, 0);
  std::vector<int> out;
  out.reserve(s.k());
  int next = 0;
  for (int v : s.entries()) {
    if (relabel[v] == 0) relabel[v] = ++next;
    out.push_back(relabel[v]);
  }
  return {std::move(out), next};
}

EquivalenceClass class_from_string(const std::string& text) {
  std::vector<int> entries;
  for (char c : text) {
    if (c == ' ' || c == ',') continue;
    if (c < '1' || c > '9')
      throw std::invalid_argument("class string: expected digits 1..9");
    entries.push_back(c - '0');
  }
  if (entries.size() < 2) throw std::invalid_argument("class string: need k >= 2");
  int mx = 0;
  for (int v : entries) {
    if (v > mx + 1)
      throw std::invalid_argument("class string: not a restricted growth string");
    mx = std::max(mx, v);
  }
  return {std::move(entries), mx};
}

std::vector<EquivalenceClass> enumerate_classes(int k, int t) {
  if (k < 2 || t < 2)
    throw std::invalid_argument("enumerate_classes: need k >= 2 and t >= 2");
  std::vector<EquivalenceClass> out;
  std::vector<int> cur(k);
  // Depth-first in lexicographic order; cur[i] <= 1 + max(cur[0..i-1]).
  auto rec = [&](auto&& self, int pos, int mx) -> void {
    if (pos == k) {
      out.push_back({cur, mx});
      return;
    }
    int hi = std::min(mx + 1, t);
    for (int v = 1; v <= hi; ++v) {
      cur[pos] = v;
      self(self, pos + 1, std::max(mx, v));
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::uint64_t class_count(int k, int t) {
  // S(k, m) by the triangle recurrence.
  std::vector<std::vector<std::uint64_t>> s(k + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int m = 1; m <= i; ++m)
      s[i][m] = s[i - 1][m - 1] + std::uint64_t(m) * s[i - 1][m];
  std::uint64_t total = 0;
  for (int m = 1; m <= std::min(k, t); ++m) total += s[k][m];
  return total;
}

}  // namespace xover
