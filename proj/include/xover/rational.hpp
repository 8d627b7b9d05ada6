#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xover {

using Rat = mpq_class;

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_rat(const std::string& text);

/// Best small-denominator rational near x, via the continued-fraction
/// convergents of x. Returns nothing unless some convergent with
/// denominator <= den_cap lies within tol of x.
std::optional<Rat> rationalize(double x, std::int64_t den_cap = 1000000,
                               double tol = 1e-9);

/// Dense rational matrix, just big enough for the exact verification paths.
class RatMat {
public:
  RatMat() = default;
  RatMat(int rows, int cols) : r_(rows), c_(cols), d_(size_t(rows) * cols, Rat(0)) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& operator()(int i, int j) { return d_[size_t(i) * c_ + j]; }
  const Rat& operator()(int i, int j) const { return d_[size_t(i) * c_ + j]; }

  RatMat transpose() const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& f) const;
  Rat trace() const;

  static RatMat identity(int n);

private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> d_;
};

}  // namespace xover
