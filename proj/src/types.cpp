#include "xover/types.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace xover {

int TreatmentSequence::distinct_count() const {
  std::set<int> s(entries_.begin(), entries_.end());
  return static_cast<int>(s.size());
}

std::string TreatmentSequence::str() const {
  std::ostringstream os;
  if (t_ <= 9) {
    for (int v : entries_) os << v;
  } else {
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (i) os << ',';
      os << entries_[i];
    }
  }
  return os.str();
}

TreatmentSequence parse_sequence(const std::string& text, int t) {
  std::vector<int> entries;
  if (t <= 9) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '1' || c > '9')
        throw std::invalid_argument("sequence string: expected digits 1..9");
      entries.push_back(c - '0');
    }
  } else {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) entries.push_back(std::stoi(tok));
  }
  return TreatmentSequence(entries, t);
}

ApproximateDesign::ApproximateDesign(std::map<TreatmentSequence, double> props,
                                     double n)
    : proportions(std::move(props)), nominal_n(n) {
  if (proportions.empty())
    throw std::invalid_argument("approximate design: empty proportion map");
  k = proportions.begin()->first.k();
  t = proportions.begin()->first.t();
  double sum = 0.0;
  for (const auto& [s, p] : proportions) {
    if (s.k() != k || s.t() != t)
      throw std::invalid_argument("approximate design: mixed k or t");
    if (p < 0)
      throw std::invalid_argument("approximate design: negative proportion");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("approximate design: proportions must sum to 1");
}

}  // namespace xover
