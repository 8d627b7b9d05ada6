#pragma once

#include "xover/classes.hpp"
#include "xover/linalg.hpp"
#include "xover/rational.hpp"
#include "xover/types.hpp"

#include <array>
#include <cstdint>

namespace xover {

/// Orbit number (1..7) of an effect/selector triple (u, v, w) under the
/// simultaneous relabelling action: u, w in 1..t, v in 0..t.
///   1: v=u, w=u      2: 0<v!=u, w=u    3: 0<v!=u, w=v   4: 0<v, u,v,w distinct
///   5: v=0, w=u      6: v=0, w!=u      7: v=u, w!=u
int orbit_of(int u, int v, int w);

/// The seven 0/1 basis matrices, each t(t+1) x t; supports partition the
/// whole index set, and every one commutes with the relabelling action.
struct OrbitBasis {
  int t;
  std::array<MatrixXd, 7> l;  // l[q-1] is the orbit-q matrix

  explicit OrbitBasis(int t);
};

/// Per-class 6x6 coefficient matrix c_pq = tr((X L_p)' Q_k (X L_q)) for the
/// class representative X. Every entry is an integer multiple of 1/k; the
/// integer numerators are carried alongside the double view so the exact
/// paths never see roundoff.
struct CoefficientTable {
  EquivalenceClass cls;
  int t = 0;
  int k = 0;
  Matrix6d c = Matrix6d::Zero();
  std::array<std::int64_t, 36> k_times_c{};  // row-major, c = k_times_c / k

  Rat c_exact(int p, int q) const {  // p, q in 1..6
    Rat r(k_times_c[(p - 1) * 6 + (q - 1)], k);
    r.canonicalize();
    return r;
  }
};

/// The free part of the reduction coefficients: components 2..6; component 1
/// is pinned to 1 and component 7 to 0 by the selector constraint.
struct GammaPoint {
  Vector5d v = Vector5d::Zero();

  static GammaPoint zero() { return {}; }
};

CoefficientTable coefficients(const EquivalenceClass& cls, int t);

double h_value(const CoefficientTable& tbl, const GammaPoint& g);
Vector5d h_gradient(const CoefficientTable& tbl, const GammaPoint& g);

/// Exact evaluation with rational coefficients (gamma given as rationals).
Rat h_value_exact(const CoefficientTable& tbl, const std::array<Rat, 5>& g);
std::array<Rat, 5> h_gradient_exact(const CoefficientTable& tbl,
                                    const std::array<Rat, 5>& g);

/// Tables for every class of (k, t), in lexicographic class order.
std::vector<CoefficientTable> coefficient_tables(int k, int t);

}  // namespace xover
