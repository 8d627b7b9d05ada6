#include "xover/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace xover {

TreatmentSequence apply_permutation(const TreatmentSequence& s,
                                    const Permutation& perm) {
  if (int(perm.size()) != s.t())
    throw std::invalid_argument("permutation size must equal t");
  std::vector<int> out;
  out.reserve(s.k());
  for (int v : s.entries()) out.push_back(perm[v - 1]);
  return TreatmentSequence(std::move(out), s.t());
}

namespace {

/// All ordered m-tuples of distinct labels from 1..t, lexicographic.
void for_each_injection(int m, int t, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> img(m);
  std::vector<char> used(t + 1, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      fn(img);
      return;
    }
    for (int v = 1; v <= t; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      img[pos] = v;
      self(self, pos + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
}

TreatmentSequence relabel_canonical(const EquivalenceClass& cls,
                                    const std::vector<int>& img, int t) {
  std::vector<int> out;
  out.reserve(cls.k());
  for (int v : cls.canonical) out.push_back(img[v - 1]);
  return TreatmentSequence(std::move(out), t);
}

}  // namespace

ApproximateDesign symmetrize(const ApproximateDesign& d) {
  // Mass per equivalence class, then spread uniformly over the orbit.
  std::map<EquivalenceClass, double> mass;
  for (const auto& [s, p] : d.proportions) mass[canonicalize(s)] += p;

  std::map<TreatmentSequence, double> out;
  for (const auto& [cls, total] : mass) {
    std::vector<TreatmentSequence> orbit;
    for_each_injection(cls.block_count, d.t, [&](const std::vector<int>& img) {
      orbit.push_back(relabel_canonical(cls, img, d.t));
    });
    double share = total / double(orbit.size());
    for (auto& s : orbit) out[std::move(s)] += share;
  }
  return ApproximateDesign(std::move(out), d.nominal_n);
}

ExactDesign symmetric_design_from_class(const EquivalenceClass& cls, int t) {
  if (cls.block_count > t)
    throw std::invalid_argument("class uses more labels than t provides");
  std::vector<TreatmentSequence> rows;
  for_each_injection(cls.block_count, t, [&](const std::vector<int>& img) {
    rows.push_back(relabel_canonical(cls, img, t));
  });
  return ExactDesign(std::move(rows));
}

ApproximateDesign as_approximate(const ExactDesign& d) {
  std::map<TreatmentSequence, double> props;
  for (const auto& r : d.rows) props[r] += 1.0 / d.n();
  return ApproximateDesign(std::move(props), double(d.n()));
}

namespace {

std::vector<std::vector<int>> sorted_rows(const ExactDesign& d) {
  std::vector<std::vector<int>> rows;
  rows.reserve(d.rows.size());
  for (const auto& r : d.rows) rows.push_back(r.entries());
  std::sort(rows.begin(), rows.end());
  return rows;
}

bool fixes_design(const std::vector<std::vector<int>>& rows, const Permutation& perm,
                  std::vector<std::vector<int>>& scratch) {
  scratch.clear();
  for (const auto& r : rows) {
    std::vector<int> img;
    img.reserve(r.size());
    for (int v : r) img.push_back(perm[v - 1]);
    scratch.push_back(std::move(img));
  }
  std::sort(scratch.begin(), scratch.end());
  return scratch == rows;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

/// Size of the subgroup generated by `gens` (BFS closure).
std::uint64_t closure_size(const std::vector<Permutation>& gens, int t) {
  std::set<Permutation> seen;
  Permutation id(t);
  std::iota(id.begin(), id.end(), 1);
  seen.insert(id);
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& gen : gens) {
        Permutation h = compose(gen, g);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

AutomorphismReport automorphism_group(const ExactDesign& d) {
  const int t = d.t();
  if (t > 8)
    throw std::invalid_argument(
        "automorphism_group: exhaustive search supports t <= 8 only");

  auto rows = sorted_rows(d);
  std::vector<std::vector<int>> scratch;

  std::vector<Permutation> elements;
  Permutation perm(t);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (fixes_design(rows, perm, scratch)) elements.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  AutomorphismReport rep;
  rep.order = elements.size();

  // Orbits on points.
  std::vector<int> point_orbit(t + 1, 0);
  int n_orbits = 0;
  for (int u = 1; u <= t; ++u) {
    if (point_orbit[u]) continue;
    ++n_orbits;
    for (const auto& g : elements) point_orbit[g[u - 1]] = n_orbits;
    point_orbit[u] = n_orbits;
  }
  rep.transitive = (n_orbits == 1);

  // Orbits on ordered pairs of distinct points.
  if (rep.transitive && t >= 2) {
    std::set<std::pair<int, int>> orbit;
    for (const auto& g : elements) orbit.emplace(g[0], g[1]);  // image of (1,2)
    rep.doubly_transitive = (orbit.size() == std::uint64_t(t) * (t - 1));
  }

  // Greedy small generating set.
  std::vector<Permutation> gens;
  std::uint64_t covered = 1;
  for (const auto& g : elements) {
    if (covered == rep.order) break;
    bool is_id = true;
    for (int i = 0; i < t; ++i)
      if (g[i] != i + 1) { is_id = false; break; }
    if (is_id) continue;
    auto trial = gens;
    trial.push_back(g);
    std::uint64_t size = closure_size(trial, t);
    if (size > covered) {
      gens = std::move(trial);
      covered = size;
    }
  }
  rep.generators = std::move(gens);
  return rep;
}

namespace {

StrongBalanceReport balance_from_counts(
    int t, int k, const std::vector<double>& first,
    const std::vector<std::vector<double>>& self_counts,
    const std::vector<std::vector<double>>& pair_counts, double tol) {
  StrongBalanceReport rep;
  auto all_equal = [&](const std::vector<double>& v) {
    for (double x : v)
      if (std::abs(x - v.front()) > tol) return false;
    return true;
  };
  rep.first_period_equal = all_equal(first);
  rep.self_precedence_equal = true;
  rep.pair_precedence_equal = true;
  for (int j = 0; j + 1 < k; ++j) {
    if (!all_equal(self_counts[j])) rep.self_precedence_equal = false;
    if (!all_equal(pair_counts[j])) rep.pair_precedence_equal = false;
  }
  (void)t;
  rep.strongly_balanced = rep.first_period_equal && rep.self_precedence_equal &&
                          rep.pair_precedence_equal;
  return rep;
}

}  // namespace

StrongBalanceReport check_strong_balance(const ExactDesign& d) {
  const int t = d.t(), k = d.k();
  std::vector<double> first(t, 0.0);
  std::vector<std::vector<double>> selfc(k - 1, std::vector<double>(t, 0.0));
  std::vector<std::vector<double>> pairc(k - 1,
                                         std::vector<double>(t * (t - 1), 0.0));
  for (const auto& r : d.rows) {
    first[r.at(1) - 1] += 1.0;
    for (int j = 2; j <= k; ++j) {
      int u = r.at(j), v = r.at(j - 1);
      if (u == v)
        selfc[j - 2][u - 1] += 1.0;
      else
        pairc[j - 2][(u - 1) * (t - 1) + (v > u ? v - 2 : v - 1)] += 1.0;
    }
  }
  return balance_from_counts(t, k, first, selfc, pairc, 1e-9);
}

StrongBalanceReport check_strong_balance(const ApproximateDesign& d, double tol) {
  const int t = d.t, k = d.k;
  std::vector<double> first(t, 0.0);
  std::vector<std::vector<double>> selfc(k - 1, std::vector<double>(t, 0.0));
  std::vector<std::vector<double>> pairc(k - 1,
                                         std::vector<double>(t * (t - 1), 0.0));
  for (const auto& [r, p] : d.proportions) {
    first[r.at(1) - 1] += p;
    for (int j = 2; j <= k; ++j) {
      int u = r.at(j), v = r.at(j - 1);
      if (u == v)
        selfc[j - 2][u - 1] += p;
      else
        pairc[j - 2][(u - 1) * (t - 1) + (v > u ? v - 2 : v - 1)] += p;
    }
  }
  return balance_from_counts(t, k, first, selfc, pairc, tol);
}

}  // namespace xover
