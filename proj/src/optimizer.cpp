#include "xover/optimizer.hpp"

#include "xover/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace xover {

namespace {

using Tables = std::vector<CoefficientTable>;

Vector6d lift(const GammaPoint& g) {
  Vector6d v;
  v << 1.0, g.v;
  return v;
}

std::vector<double> all_h(const Tables& tabs, const GammaPoint& g) {
  std::vector<double> out(tabs.size());
  Vector6d v = lift(g);
  for (size_t i = 0; i < tabs.size(); ++i) out[i] = v.dot(tabs[i].c * v);
  return out;
}

double max_h(const Tables& tabs, const GammaPoint& g) {
  double m = -std::numeric_limits<double>::infinity();
  Vector6d v = lift(g);
  for (const auto& tb : tabs) m = std::max(m, v.dot(tb.c * v));
  return m;
}

/// Closed-form minimizer of the pi-weighted sum of the quadratics
/// (minimum-norm minimizer when the combined Hessian is singular).
struct InnerMin {
  GammaPoint gamma;
  double value;
};

InnerMin weighted_min(const Tables& tabs, const std::vector<double>& pi) {
  Matrix6d c = Matrix6d::Zero();
  for (size_t i = 0; i < tabs.size(); ++i)
    if (pi[i] != 0.0) c += pi[i] * tabs[i].c;
  MatrixXd h = c.bottomRightCorner<5, 5>();
  VectorXd b = c.block<5, 1>(1, 0);
  GammaPoint g;
  g.v = -pseudo_inverse(h, 1e-13) * b;
  return {g, c(0, 0) + b.dot(g.v)};
}

struct FwState {
  std::vector<double> pi;
  GammaPoint gamma;
  double lower = 0.0;  // value of the weighted inner minimum
  double upper = 0.0;  // max_l h_l at gamma
  int iters = 0;
};

/// Frank-Wolfe ascent (with away steps) on the simplex of class weights;
/// the inner minimum is available in closed form, so each step only needs a
/// 1-d line search along the exchange direction.
FwState frank_wolfe(const Tables& tabs, std::vector<double> pi0, int max_iters,
                    double gap_rtol) {
  const size_t n = tabs.size();
  FwState st;
  st.pi = std::move(pi0);
  auto inner = weighted_min(tabs, st.pi);
  st.gamma = inner.gamma;
  st.lower = inner.value;

  double last_lower = st.lower;
  int stall = 0;
  for (st.iters = 0; st.iters < max_iters; ++st.iters) {
    std::vector<double> hv = all_h(tabs, st.gamma);
    size_t up = 0;
    for (size_t i = 1; i < n; ++i)
      if (hv[i] > hv[up]) up = i;
    st.upper = hv[up];
    double scale = std::max(1.0, std::abs(st.upper));
    if (st.upper - st.lower <= gap_rtol * scale) break;

    // Away candidate: the support class of least value.
    size_t down = up;
    bool have_down = false;
    for (size_t i = 0; i < n; ++i)
      if (st.pi[i] > 0.0 && (!have_down || hv[i] < hv[down])) {
        down = i;
        have_down = true;
      }
    bool away = have_down && down != up &&
                (st.lower - hv[down]) > (hv[up] - st.lower);

    auto blended = [&](double lambda) {
      std::vector<double> p(n);
      if (away) {
        // Move the weight of `down` onto the rest, proportionally.
        double w = lambda * st.pi[down];
        double rest = 1.0 - st.pi[down];
        for (size_t i = 0; i < n; ++i)
          p[i] = (i == down) ? st.pi[i] - w
                             : st.pi[i] + (rest > 0 ? w * st.pi[i] / rest : 0.0);
      } else {
        for (size_t i = 0; i < n; ++i) p[i] = (1.0 - lambda) * st.pi[i];
        p[up] += lambda;
      }
      return p;
    };

    // The line function is concave; bisect on the sign of its derivative,
    // which by the envelope theorem is h_up(g(lambda)) - value(lambda) for a
    // toward step (negated for an away step).
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 48; ++it) {
      double mid = 0.5 * (lo + hi);
      auto im = weighted_min(tabs, blended(mid));
      Vector6d v = lift(im.gamma);
      double deriv = away ? (im.value - v.dot(tabs[down].c * v))
                          : (v.dot(tabs[up].c * v) - im.value);
      if (deriv > 0)
        lo = mid;
      else
        hi = mid;
    }
    std::vector<double> cand = blended(0.5 * (lo + hi));
    double csum = std::accumulate(cand.begin(), cand.end(), 0.0);
    for (double& p : cand) p = std::max(p / csum, 0.0);
    auto im = weighted_min(tabs, cand);
    if (im.value >= st.lower) {
      st.pi = std::move(cand);
      st.gamma = im.gamma;
      st.lower = im.value;
    }
    for (double& p : st.pi)
      if (p < 1e-15) p = 0.0;

    if (st.lower - last_lower <= 1e-16 * scale) {
      if (++stall > 60) break;  // no measurable ascent left
    } else {
      stall = 0;
    }
    last_lower = st.lower;
  }
  st.upper = max_h(tabs, st.gamma);
  return st;
}

struct SaddlePoint {
  GammaPoint gamma;
  std::vector<double> pi;  // aligned with the active subset
  double z = 0.0;
  double residual = std::numeric_limits<double>::infinity();
};

/// Damped least-squares Newton on the equal-value stationarity system of a
/// candidate active set: sum pi_l grad h_l = 0, h_l = z, sum pi = 1.
SaddlePoint newton_saddle(const Tables& act, const GammaPoint& g0,
                          const std::vector<double>& pi0, double z0) {
  const int m = int(act.size());
  VectorXd x(6 + m);
  x.head<5>() = g0.v;
  for (int j = 0; j < m; ++j) x[5 + j] = pi0[j];
  x[5 + m] = z0;

  auto fvec = [&](const VectorXd& xx) {
    GammaPoint g;
    g.v = xx.head<5>();
    Vector6d v = lift(g);
    VectorXd f = VectorXd::Zero(6 + m);
    for (int j = 0; j < m; ++j) {
      Vector6d cg = act[j].c * v;
      f.head<5>() += xx[5 + j] * 2.0 * cg.tail<5>();
      f[5 + j] = v.dot(cg) - xx[5 + m];
      f[5 + m] += xx[5 + j];
    }
    f[5 + m] -= 1.0;
    return f;
  };

  VectorXd f = fvec(x);
  for (int iter = 0; iter < 120; ++iter) {
    double scale = std::max(1.0, std::abs(x[5 + m]));
    if (f.norm() <= 1e-14 * scale) break;
    GammaPoint g;
    g.v = x.head<5>();
    Vector6d v = lift(g);
    MatrixXd jac = MatrixXd::Zero(6 + m, 6 + m);
    for (int j = 0; j < m; ++j) {
      Vector5d grad = 2.0 * (act[j].c * v).tail<5>();
      jac.block<5, 5>(0, 0) += x[5 + j] * 2.0 * act[j].c.bottomRightCorner<5, 5>();
      jac.block<5, 1>(0, 5 + j) = grad;
      jac.block<1, 5>(5 + j, 0) = grad.transpose();
      jac(5 + j, 5 + m) = -1.0;
      jac(5 + m, 5 + j) = 1.0;
    }
    VectorXd dx = lstsq(jac, -f);
    double alpha = 1.0;
    bool moved = false;
    for (int back = 0; back < 40; ++back) {
      VectorXd xn = x + alpha * dx;
      VectorXd fn = fvec(xn);
      if (fn.allFinite() && fn.norm() <= (1.0 - 0.25 * alpha) * f.norm()) {
        x = xn;
        f = fn;
        moved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) break;
  }

  SaddlePoint sp;
  sp.gamma.v = x.head<5>();
  sp.pi.assign(m, 0.0);
  for (int j = 0; j < m; ++j) sp.pi[j] = x[5 + j];
  sp.z = x[5 + m];
  sp.residual = f.norm();
  return sp;
}

struct SubsetSolve {
  GammaPoint gamma;
  double z = 0.0;
  std::vector<double> pi;  // over the subset tables
  bool certified = false;
};

/// Minimax over a small set of tables: FW phase for globalization and active
/// set identification, Newton phase for machine precision; classes are
/// dropped from the trial active set when the equal-value system rejects
/// them (large residual or negative weight).
SubsetSolve solve_subset(const Tables& tabs, const SolverSettings& cfg,
                         std::vector<double> warm_pi = {}) {
  const size_t n = tabs.size();
  if (warm_pi.size() != n) warm_pi.assign(n, 1.0 / double(n));
  FwState fw = frank_wolfe(tabs, warm_pi, std::max(200, cfg.max_iters / 4),
                           1e-8);

  SubsetSolve best;
  best.gamma = fw.gamma;
  best.z = fw.upper;
  best.pi = fw.pi;

  GammaPoint g = fw.gamma;
  double lb = fw.lower;
  for (int round = 0; round < 40; ++round) {
    std::vector<double> hv = all_h(tabs, g);
    double z = *std::max_element(hv.begin(), hv.end());
    double scale = std::max(1.0, std::abs(z));
    double delta = std::max(4.0 * std::max(z - lb, 0.0), 1e-9 * scale);

    std::vector<int> trial;
    for (size_t i = 0; i < n; ++i)
      if (hv[i] >= z - delta) trial.push_back(int(i));
    std::sort(trial.begin(), trial.end(),
              [&](int a, int b) { return hv[a] > hv[b]; });
    if (trial.size() > 12) trial.resize(12);

    SaddlePoint sp;
    for (int drops = 0; drops <= int(trial.size()); ++drops) {
      Tables act;
      std::vector<double> pw;
      for (int i : trial) {
        act.push_back(tabs[i]);
        pw.push_back(std::max(fw.pi[i], 1e-8));
      }
      double s = std::accumulate(pw.begin(), pw.end(), 0.0);
      for (double& p : pw) p /= s;
      sp = newton_saddle(act, g, pw, z);

      if (!sp.gamma.v.allFinite() || sp.residual > 1e-11 * scale) {
        if (trial.size() <= 1) break;
        // Drop the member farthest from the common value.
        size_t worst = 0;
        double worst_dev = -1.0;
        Vector6d v = lift(sp.gamma);
        for (size_t j = 0; j < act.size(); ++j) {
          double dev = std::abs(v.dot(act[j].c * v) - sp.z);
          if (dev > worst_dev) {
            worst_dev = dev;
            worst = j;
          }
        }
        trial.erase(trial.begin() + long(worst));
        continue;
      }
      double min_pi = *std::min_element(sp.pi.begin(), sp.pi.end());
      if (min_pi < -1e-9) {
        size_t neg = size_t(std::min_element(sp.pi.begin(), sp.pi.end()) -
                            sp.pi.begin());
        trial.erase(trial.begin() + long(neg));
        continue;
      }
      break;
    }

    if (sp.gamma.v.allFinite() && sp.residual <= 1e-11 * scale) {
      double merit = max_h(tabs, sp.gamma);
      if (merit <= sp.z + cfg.gap_rtol * scale) {
        best.gamma = sp.gamma;
        best.z = sp.z;
        best.pi.assign(n, 0.0);
        for (size_t j = 0; j < trial.size(); ++j)
          best.pi[trial[j]] = std::max(sp.pi[j], 0.0);
        best.certified = true;
        return best;
      }
      if (merit < best.z) {
        best.gamma = sp.gamma;
        best.z = merit;
        g = sp.gamma;
        continue;
      }
    }

    // Newton did not certify: resume FW from the current weights.
    fw = frank_wolfe(tabs, fw.pi, std::max(500, cfg.max_iters / 2),
                     std::max(1e-13, 0.05 * (best.z - lb) / scale));
    g = fw.gamma;
    lb = std::max(lb, fw.lower);
    if (fw.upper < best.z) {
      best.gamma = fw.gamma;
      best.z = fw.upper;
      best.pi = fw.pi;
    }
  }
  return best;
}

/// Projected subgradient fallback on the box [-2,2]^5, multistart.
GammaPoint subgradient_multistart(const Tables& tabs, const SolverSettings& cfg) {
  std::mt19937 rng(cfg.fallback_seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  GammaPoint best;
  double best_val = max_h(tabs, best);
  for (int start = 0; start < 9; ++start) {
    GammaPoint g;
    if (start > 0)
      for (int i = 0; i < 5; ++i) g.v[i] = box(rng);
    double fg = max_h(tabs, g);
    for (int it = 1; it <= 3000; ++it) {
      std::vector<double> hv = all_h(tabs, g);
      size_t top = size_t(std::max_element(hv.begin(), hv.end()) - hv.begin());
      Vector5d grad = 2.0 * (tabs[top].c * lift(g)).tail<5>();
      double gn = grad.norm();
      if (gn < 1e-15) break;
      double step = 0.5 * std::max(1.0, std::abs(hv[top])) / std::sqrt(double(it));
      g.v -= (step / gn) * grad;
      g.v = g.v.cwiseMax(-2.0).cwiseMin(2.0);
      fg = std::min(fg, max_h(tabs, g));
    }
    if (fg < best_val) {
      best_val = fg;
      best = g;
    }
  }
  return best;
}

struct CoreResult {
  GammaPoint gamma;
  double z = 0.0;
  bool certified = false;
};

CoreResult core_minimize(const Tables& tabs, const SolverSettings& cfg) {
  const size_t n = tabs.size();
  if (n == 0) throw std::invalid_argument("minimize_hstar: no coefficient tables");
  for (const auto& tb : tabs)
    if (tb.t != tabs.front().t || tb.k != tabs.front().k)
      throw std::invalid_argument("minimize_hstar: tables disagree on k or t");

  // Working set: best classes at gamma = 0 plus the best pure class.
  GammaPoint zero;
  std::vector<double> h0 = all_h(tabs, zero);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h0[a] > h0[b]; });
  std::vector<int> wset(order.begin(), order.begin() + std::min<size_t>(8, n));
  {
    int best_pure = 0;
    double best_val = -1.0;
    for (size_t i = 0; i < n; ++i) {
      std::vector<double> e(n, 0.0);
      e[i] = 1.0;
      double v = weighted_min(tabs, e).value;
      if (v > best_val) {
        best_val = v;
        best_pure = int(i);
      }
    }
    if (std::find(wset.begin(), wset.end(), best_pure) == wset.end())
      wset.push_back(best_pure);
  }

  CoreResult out;
  for (int outer = 0; outer < 80; ++outer) {
    Tables sub;
    for (int i : wset) sub.push_back(tabs[i]);
    SubsetSolve ss = solve_subset(sub, cfg);
    out.gamma = ss.gamma;
    out.z = ss.z;

    std::vector<double> hv = all_h(tabs, ss.gamma);
    double scale = std::max(1.0, std::abs(ss.z));
    std::vector<int> viol;
    for (size_t i = 0; i < n; ++i)
      if (hv[i] > ss.z + 1e-10 * scale &&
          std::find(wset.begin(), wset.end(), int(i)) == wset.end())
        viol.push_back(int(i));
    if (viol.empty() && ss.certified) {
      out.certified = true;
      return out;
    }
    if (viol.empty() && !ss.certified) break;
    std::sort(viol.begin(), viol.end(),
              [&](int a, int b) { return hv[a] > hv[b]; });
    for (size_t j = 0; j < viol.size() && j < 3; ++j) wset.push_back(viol[j]);
  }

  // Fallback: subgradient multistart, then one more Newton pass on the full
  // list restricted to the epsilon-active set.
  GammaPoint g = subgradient_multistart(tabs, cfg);
  if (max_h(tabs, g) < out.z) out.gamma = g, out.z = max_h(tabs, g);
  SubsetSolve last = solve_subset(tabs, cfg);
  if (last.z <= out.z || last.certified) {
    out.gamma = last.gamma;
    out.z = last.z;
    out.certified = last.certified;
  }
  return out;
}

}  // namespace

std::pair<GammaPoint, double> minimize_hstar(const Tables& tables,
                                             const SolverSettings& settings) {
  CoreResult r = core_minimize(tables, settings);
  if (!r.certified) {
    std::ostringstream os;
    os << "minimize_hstar failed to certify a minimizer (value " << r.z
       << ", " << tables.size()
       << " classes); the objective is convex, so this indicates a bug";
    throw std::runtime_error(os.str());
  }
  return {r.gamma, r.z};
}

std::vector<int> active_classes(const Tables& tables, const GammaPoint& gamma_star,
                                double h_star, double rtol) {
  std::vector<int> out;
  Vector6d v = lift(gamma_star);
  for (size_t i = 0; i < tables.size(); ++i)
    if (v.dot(tables[i].c * v) >= h_star * (1.0 - rtol)) out.push_back(int(i));
  if (out.empty())
    throw std::runtime_error("active_classes: empty active set (h* inconsistent)");
  return out;
}

ProportionSolution solve_proportions(const Tables& active,
                                     const GammaPoint& gamma_star) {
  const int m = int(active.size());
  if (m == 0) throw std::invalid_argument("solve_proportions: empty active set");
  if (m > 16)
    throw std::runtime_error(
        "solve_proportions: active set too large for exact support search");

  MatrixXd sys(6, m);
  for (int j = 0; j < m; ++j) {
    sys.block<5, 1>(0, j) = h_gradient(active[j], gamma_star);
    sys(5, j) = 1.0;
  }
  VectorXd rhs = VectorXd::Zero(6);
  rhs[5] = 1.0;

  // Minimum-norm nonnegative solution by exhaustive support search: on the
  // optimal support the solution lies in the row space, which is exactly
  // what the pseudoinverse solve returns.
  ProportionSolution sol;
  sol.pi.assign(m, 0.0);
  double best_norm = std::numeric_limits<double>::infinity();
  double best_resid = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> sup;
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) sup.push_back(j);
    MatrixXd a(6, sup.size());
    for (size_t j = 0; j < sup.size(); ++j) a.col(long(j)) = sys.col(sup[j]);
    VectorXd x = lstsq(a, rhs);
    if (x.minCoeff() < -1e-12) continue;
    double resid = (a * x - rhs).norm();
    double norm = x.norm();
    bool better = resid < best_resid - 1e-12 ||
                  (resid < best_resid + 1e-12 && norm < best_norm - 1e-15);
    if (better) {
      best_resid = resid;
      best_norm = norm;
      sol.pi.assign(m, 0.0);
      for (size_t j = 0; j < sup.size(); ++j) sol.pi[sup[j]] = std::max(x[long(j)], 0.0);
    }
  }
  sol.residual = best_resid;

  Eigen::JacobiSVD<MatrixXd> svd(sys);
  svd.setThreshold(1e-10);
  sol.degeneracy_dim = m - int(svd.rank());
  return sol;
}

Certificate certify(const Tables& all_tables, const std::vector<int>& active_idx,
                    const std::vector<double>& pi, const GammaPoint& gamma_star,
                    double h_star, const SolverSettings& settings) {
  Certificate cert;
  double scale = std::max(1.0, std::abs(h_star));

  std::vector<char> is_active(all_tables.size(), 0);
  for (int i : active_idx) is_active[i] = 1;
  Vector6d v = lift(gamma_star);
  double gap = -std::numeric_limits<double>::infinity();
  double dom = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < all_tables.size(); ++i) {
    double d = v.dot(all_tables[i].c * v) - h_star;
    dom = std::max(dom, d);
    if (!is_active[i]) gap = std::max(gap, d);
  }
  cert.max_inactive_gap = gap;
  cert.dominance_ok = dom <= 1e-9 * scale;

  Vector5d station = Vector5d::Zero();
  double sum = 0.0;
  cert.min_proportion = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < active_idx.size(); ++j) {
    station += pi[j] * h_gradient(all_tables[active_idx[j]], gamma_star);
    sum += pi[j];
    cert.min_proportion = std::min(cert.min_proportion, pi[j]);
  }
  cert.kkt_residual = station.norm();
  cert.sum_error = std::abs(sum - 1.0);
  cert.stationarity_ok = cert.kkt_residual <= 1e-8;
  cert.nonnegativity_ok = cert.min_proportion >= -1e-12 && cert.sum_error <= 1e-10;

  // Re-solve the inner minimum under the reported weights.
  Tables act;
  for (int i : active_idx) act.push_back(all_tables[i]);
  InnerMin im = weighted_min(act, pi);
  cert.resolve_gap = std::abs(im.value - h_star);
  cert.resolve_ok = cert.resolve_gap <= 1e-9 * scale;

  if (!cert.dominance_ok)
    cert.failure = "dominance: some class exceeds h* at gamma*";
  else if (!cert.stationarity_ok)
    cert.failure = "stationarity: weighted gradient sum is not zero";
  else if (!cert.nonnegativity_ok)
    cert.failure = "nonnegativity: proportions negative or not summing to 1";
  else if (!cert.resolve_ok)
    cert.failure = "re-solve: inner minimum under pi* differs from h*";
  (void)settings;
  return cert;
}

ExactSolution rationalize_solution(const Tables& all_tables,
                                   const std::vector<int>& active_idx,
                                   const std::vector<double>& pi,
                                   const GammaPoint& gamma_star, double h_star,
                                   std::int64_t den_cap) {
  ExactSolution ex;
  ex.verified = false;

  bool ok = true;
  for (int i = 0; i < 5; ++i) {
    auto r = rationalize(gamma_star.v[i], den_cap);
    if (!r) { ok = false; break; }
    ex.gamma[i] = *r;
  }
  if (ok) {
    auto rh = rationalize(h_star, den_cap);
    ok = rh.has_value();
    if (ok) ex.h_star = *rh;
  }
  Rat pi_sum = 0;
  if (ok) {
    for (size_t j = 0; j < active_idx.size(); ++j) {
      auto rp = rationalize(pi[j], den_cap);
      if (!rp || *rp < 0) { ok = false; break; }
      ex.proportions.emplace_back(all_tables[active_idx[j]].cls, *rp);
      pi_sum += *rp;
    }
  }
  if (!ok) {
    ex.proportions.clear();
    return ex;
  }

  // Exact optimality proof: the weights certify the lower bound through
  // stationarity of the weighted sum at gamma with value h, and gamma
  // certifies the upper bound through dominance.
  if (pi_sum != 1) return ex;

  std::array<Rat, 5> station{0, 0, 0, 0, 0};
  Rat value = 0;
  for (size_t j = 0; j < active_idx.size(); ++j) {
    const auto& tbl = all_tables[active_idx[j]];
    const Rat& w = ex.proportions[j].second;
    if (w == 0) continue;
    auto grad = h_gradient_exact(tbl, ex.gamma);
    for (int i = 0; i < 5; ++i) station[i] += w * grad[i];
    value += w * h_value_exact(tbl, ex.gamma);
  }
  for (const Rat& s : station)
    if (s != 0) return ex;
  if (value != ex.h_star) return ex;

  for (const auto& tbl : all_tables)
    if (h_value_exact(tbl, ex.gamma) > ex.h_star) return ex;

  // Active classes must sit exactly on the optimum.
  for (size_t j = 0; j < active_idx.size(); ++j)
    if (ex.proportions[j].second > 0 &&
        h_value_exact(all_tables[active_idx[j]], ex.gamma) != ex.h_star)
      return ex;

  ex.verified = true;
  return ex;
}

double single_class_efficiency(const CoefficientTable& tbl, double h_star) {
  MatrixXd h = tbl.c.bottomRightCorner<5, 5>();
  VectorXd b = tbl.c.block<5, 1>(1, 0);
  double min_val = tbl.c(0, 0) - b.dot(pseudo_inverse(h, 1e-13) * b);
  double eff = min_val / h_star;
  return std::clamp(eff, 0.0, 1.0);
}

MaximinSolution solve_maximin(const Tables& tables, const SolverSettings& settings) {
  MaximinSolution sol;
  sol.settings = settings;
  sol.k = tables.empty() ? 0 : tables.front().k;
  sol.t = tables.empty() ? 0 : tables.front().t;

  auto [gamma, h] = minimize_hstar(tables, settings);
  sol.gamma_star = gamma;
  sol.h_star = h;

  double rtol = settings.active_rtol;
  std::vector<int> act;
  for (int attempt = 0; attempt < 4; ++attempt) {
    act = active_classes(tables, gamma, h, rtol);
    sol.proportions = solve_proportions(
        [&] {
          Tables sub;
          for (int i : act) sub.push_back(tables[i]);
          return sub;
        }(),
        gamma);
    if (sol.proportions.residual <= 1e-8) break;
    rtol *= 10.0;  // wrong active set; loosen and retry
  }
  if (sol.proportions.residual > 1e-8)
    throw std::runtime_error(
        "solve_proportions: no nonnegative stationary weights within tolerance");

  sol.active.clear();
  for (size_t j = 0; j < act.size(); ++j)
    sol.active.emplace_back(tables[act[j]].cls, sol.proportions.pi[j]);

  sol.certificate =
      certify(tables, act, sol.proportions.pi, gamma, h, settings);
  if (settings.want_exact)
    sol.exact = rationalize_solution(tables, act, sol.proportions.pi, gamma, h,
                                     settings.den_cap);
  return sol;
}

MaximinSolution solve_maximin(int k, int t, const SolverSettings& settings) {
  return solve_maximin(coefficient_tables(k, t), settings);
}

}  // namespace xover
