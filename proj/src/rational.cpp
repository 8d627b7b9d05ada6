#include "xover/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace xover {

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  Rat r;
  if (slash == std::string::npos) {
    r = Rat(mpz_class(text));
  } else {
    r = Rat(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
  }
  r.canonicalize();
  return r;
}

std::optional<Rat> rationalize(double x, std::int64_t den_cap, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents p/q of the continued fraction of x.
  double rem = x;
  std::int64_t p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p1/q1 is the current convergent
  for (int i = 0; i < 64; ++i) {
    double fl = std::floor(rem);
    if (fl > 9e17 || fl < -9e17) break;
    auto a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0;
    std::int64_t q2 = a * q1 + q0;
    if (q2 > den_cap || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = double(p1) / double(q1);
    if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
      Rat r(p1, q1);
      r.canonicalize();
      return r;
    }
    double frac = rem - fl;
    if (frac < 1e-18) break;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

RatMat RatMat::transpose() const {
  RatMat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int l = 0; l < c_; ++l) {
      const Rat& a = (*this)(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o(l, j) == 0) continue;
        out(i, j) += a * o(l, j);
      }
    }
  return out;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat out(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(i, j) = (*this)(i, j) + o(i, j);
  return out;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat out(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(i, j) = (*this)(i, j) - o(i, j);
  return out;
}

RatMat RatMat::scaled(const Rat& f) const {
  RatMat out(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(i, j) = (*this)(i, j) * f;
  return out;
}

Rat RatMat::trace() const {
  Rat s = 0;
  for (int i = 0; i < r_ && i < c_; ++i) s += (*this)(i, i);
  return s;
}

RatMat RatMat::identity(int n) {
  RatMat out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

}  // namespace xover
