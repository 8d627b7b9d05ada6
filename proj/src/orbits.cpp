#include "xover/orbits.hpp"

#include "xover/model.hpp"

#include <stdexcept>

namespace xover {

int orbit_of(int u, int v, int w) {
  if (v == 0) return (w == u) ? 5 : 6;
  if (v == u) return (w == u) ? 1 : 7;
  if (w == u) return 2;
  if (w == v) return 3;
  return 4;
}

OrbitBasis::OrbitBasis(int t_) : t(t_) {
  if (t < 2) throw std::invalid_argument("orbit basis: need t >= 2");
  for (auto& m : l) m = MatrixXd::Zero(t * (t + 1), t);
  for (int u = 1; u <= t; ++u)
    for (int v = 0; v <= t; ++v)
      for (int w = 1; w <= t; ++w)
        l[orbit_of(u, v, w) - 1](pair_index(u, v, t), w - 1) = 1.0;
}

CoefficientTable coefficients(const EquivalenceClass& cls, int t) {
  if (cls.block_count > t)
    throw std::invalid_argument("coefficients: class needs more labels than t");
  const int k = cls.k();
  CoefficientTable tbl;
  tbl.cls = cls;
  tbl.t = t;
  tbl.k = k;

  // m[q][j][w] = 1 iff (s_j, s_{j-1}, w+1) is in orbit q+1; the k x t
  // products X L_q without forming anything of size t(t+1).
  std::vector<std::array<std::vector<std::int8_t>, 7>> rows(k);
  int prev = 0;
  for (int j = 0; j < k; ++j) {
    int u = cls.canonical[j];
    for (auto& col : rows[j]) col.assign(t, 0);
    for (int w = 1; w <= t; ++w) rows[j][orbit_of(u, prev, w) - 1][w - 1] = 1;
    prev = u;
  }

  for (int p = 0; p < 6; ++p) {
    for (int q = p; q < 6; ++q) {
      // k * tr(Mp' Q Mq) = k * tr(Mp' Mq) - (1' Mp) . (1' Mq)
      std::int64_t dot = 0;
      for (int j = 0; j < k; ++j)
        for (int w = 0; w < t; ++w)
          dot += std::int64_t(rows[j][p][w]) * rows[j][q][w];
      std::int64_t colsum = 0;
      for (int w = 0; w < t; ++w) {
        std::int64_t sp = 0, sq = 0;
        for (int j = 0; j < k; ++j) {
          sp += rows[j][p][w];
          sq += rows[j][q][w];
        }
        colsum += sp * sq;
      }
      std::int64_t num = std::int64_t(k) * dot - colsum;
      tbl.k_times_c[p * 6 + q] = num;
      tbl.k_times_c[q * 6 + p] = num;
      tbl.c(p, q) = tbl.c(q, p) = double(num) / k;
    }
  }
  return tbl;
}

namespace {
Vector6d lift(const GammaPoint& g) {
  Vector6d v;
  v << 1.0, g.v;
  return v;
}
}  // namespace

double h_value(const CoefficientTable& tbl, const GammaPoint& g) {
  Vector6d v = lift(g);
  return v.dot(tbl.c * v);
}

Vector5d h_gradient(const CoefficientTable& tbl, const GammaPoint& g) {
  Vector6d v = 2.0 * (tbl.c * lift(g));
  return v.tail<5>();
}

Rat h_value_exact(const CoefficientTable& tbl, const std::array<Rat, 5>& g) {
  std::array<Rat, 6> v{1, g[0], g[1], g[2], g[3], g[4]};
  Rat sum = 0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      if (tbl.k_times_c[p * 6 + q] != 0)
        sum += v[p] * v[q] * Rat(tbl.k_times_c[p * 6 + q]);
  sum /= tbl.k;
  sum.canonicalize();
  return sum;
}

std::array<Rat, 5> h_gradient_exact(const CoefficientTable& tbl,
                                    const std::array<Rat, 5>& g) {
  std::array<Rat, 6> v{1, g[0], g[1], g[2], g[3], g[4]};
  std::array<Rat, 5> out;
  for (int p = 1; p < 6; ++p) {
    Rat s = 0;
    for (int q = 0; q < 6; ++q)
      if (tbl.k_times_c[p * 6 + q] != 0)
        s += Rat(tbl.k_times_c[p * 6 + q]) * v[q];
    s = s * 2 / tbl.k;
    s.canonicalize();
    out[p - 1] = s;
  }
  return out;
}

std::vector<CoefficientTable> coefficient_tables(int k, int t) {
  std::vector<CoefficientTable> out;
  for (const auto& cls : enumerate_classes(k, t)) out.push_back(coefficients(cls, t));
  return out;
}

}  // namespace xover
