#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace xover {

/// A treatment sequence: the treatments given to one subject over k periods.
/// Labels are 1..t; the pre-period "no treatment" state is label 0 and never
/// appears in the sequence itself.
class TreatmentSequence {
public:
  TreatmentSequence(std::vector<int> entries, int t)
      : entries_(std::move(entries)), t_(t) {
    if (t_ < 1) throw std::invalid_argument("sequence: t must be >= 1");
    if (entries_.size() < 2)
      throw std::invalid_argument("sequence: need k >= 2 periods");
    for (int v : entries_)
      if (v < 1 || v > t_)
        throw std::invalid_argument("sequence: label out of range 1..t");
  }

  int k() const { return static_cast<int>(entries_.size()); }
  int t() const { return t_; }
  int at(int period) const { return entries_.at(period - 1); }  // 1-based
  const std::vector<int>& entries() const { return entries_; }

  /// Number of distinct labels used.
  int distinct_count() const;

  /// Canonical text form: digit string for t <= 9, else comma-separated.
  std::string str() const;

  bool operator==(const TreatmentSequence& o) const {
    return t_ == o.t_ && entries_ == o.entries_;
  }
  bool operator<(const TreatmentSequence& o) const {
    if (t_ != o.t_) return t_ < o.t_;
    return entries_ < o.entries_;
  }

private:
  std::vector<int> entries_;
  int t_;
};

/// Parse the text form produced by TreatmentSequence::str().
TreatmentSequence parse_sequence(const std::string& text, int t);

/// An exact design: one sequence per subject, all sharing k and t.
struct ExactDesign {
  std::vector<TreatmentSequence> rows;

  ExactDesign(std::vector<TreatmentSequence> subjects)
      : rows(std::move(subjects)) {
    if (rows.empty()) throw std::invalid_argument("design: need n >= 1 subjects");
    for (const auto& r : rows)
      if (r.k() != rows.front().k() || r.t() != rows.front().t())
        throw std::invalid_argument("design: rows disagree on k or t");
  }

  int n() const { return static_cast<int>(rows.size()); }
  int k() const { return rows.front().k(); }
  int t() const { return rows.front().t(); }
  int label(int subject, int period) const {  // both 1-based
    return rows.at(subject - 1).at(period);
  }
};

/// An approximate design: nonnegative sequence proportions summing to 1.
/// The map is ordered so iteration (and hence any accumulation) is
/// deterministic.
struct ApproximateDesign {
  std::map<TreatmentSequence, double> proportions;
  int k = 0;
  int t = 0;
  double nominal_n = 1.0;  // optional scale for reporting

  ApproximateDesign(std::map<TreatmentSequence, double> props, double n = 1.0);
};

}  // namespace xover
