#include "xover/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xover {

namespace {

struct IrreducibleEntry {
  int q, p, n;
  std::vector<int> coeffs;  // modulus minus leading term, constant first
};

// Monic irreducible polynomials for the prime-power orders in range.
const IrreducibleEntry kIrreducibles[] = {
    {4, 2, 2, {1, 1}},        // x^2 + x + 1
    {8, 2, 3, {1, 1, 0}},     // x^3 + x + 1
    {9, 3, 2, {1, 0}},        // x^2 + 1
    {16, 2, 4, {1, 1, 0, 0}}, // x^4 + x + 1
    {25, 5, 2, {2, 0}},       // x^2 + 2
    {27, 3, 3, {1, 2, 0}},    // x^3 + 2x + 1
    {32, 2, 5, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
};

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

const IrreducibleEntry* find_entry(int q) {
  for (const auto& e : kIrreducibles)
    if (e.q == q) return &e;
  return nullptr;
}

}  // namespace

bool GaloisField::supported_order(int q) {
  return (q >= 2 && q <= 32) && (is_prime(q) || find_entry(q) != nullptr);
}

GaloisField::GaloisField(int order) : q_(order) {
  if (is_prime(order) && order <= 32) {
    p_ = order;
    n_ = 1;
    return;
  }
  const IrreducibleEntry* e = find_entry(order);
  if (!e)
    throw std::invalid_argument("GaloisField: order " + std::to_string(order) +
                                " is not a supported prime power (<= 32)");
  p_ = e->p;
  n_ = e->n;
  irreducible_ = e->coeffs;
}

namespace {
void to_coeffs(int idx, int p, int n, int* out) {
  for (int i = 0; i < n; ++i) {
    out[i] = idx % p;
    idx /= p;
  }
}

int from_coeffs(const int* c, int p, int n) {
  int idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = idx * p + c[i];
  return idx;
}
}  // namespace

int GaloisField::add(int a, int b) const {
  if (n_ == 1) return (a + b) % p_;
  int ca[8], cb[8];
  to_coeffs(a, p_, n_, ca);
  to_coeffs(b, p_, n_, cb);
  for (int i = 0; i < n_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_coeffs(ca, p_, n_);
}

int GaloisField::neg(int a) const {
  if (n_ == 1) return (p_ - a) % p_;
  int ca[8];
  to_coeffs(a, p_, n_, ca);
  for (int i = 0; i < n_; ++i) ca[i] = (p_ - ca[i]) % p_;
  return from_coeffs(ca, p_, n_);
}

int GaloisField::mul(int a, int b) const {
  if (n_ == 1) return (a * b) % p_;
  int ca[8], cb[8], prod[16] = {0};
  to_coeffs(a, p_, n_, ca);
  to_coeffs(b, p_, n_, cb);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  // reduce x^d -> -modulus for d >= n
  for (int d = 2 * n_ - 2; d >= n_; --d) {
    int c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int i = 0; i < n_; ++i)
      prod[d - n_ + i] = ((prod[d - n_ + i] - c * irreducible_[i]) % p_ + p_) % p_;
  }
  return from_coeffs(prod, p_, n_);
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("GaloisField: zero has no inverse");
  // q is tiny; scan.
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("GaloisField: inverse not found (broken modulus?)");
}

bool is_orthogonal_array(const StartingDesign& sd) {
  const int t = sd.t;
  if (int(sd.triplets.size()) != t * (t - 1)) return false;
  for (int j1 = 0; j1 < 3; ++j1)
    for (int j2 = 0; j2 < 3; ++j2) {
      if (j1 == j2) continue;
      std::set<std::pair<int, int>> seen;
      for (const auto& tr : sd.triplets) {
        int u = tr[j1], v = tr[j2];
        if (u == v) return false;
        if (!seen.emplace(u, v).second) return false;
      }
      if (int(seen.size()) != t * (t - 1)) return false;
    }
  return true;
}

StartingDesign oa_triplets_odd(int t) {
  if (t < 3 || t % 2 == 0)
    throw std::invalid_argument("oa_triplets_odd: t must be odd and >= 3");
  StartingDesign sd;
  sd.t = t;
  sd.method = "oa";
  for (int u = 0; u < t; ++u)
    for (int v = 1; v < t; ++v)
      sd.triplets.push_back(
          {u + 1, (u + v) % t + 1, (u + 2 * v) % t + 1});
  std::sort(sd.triplets.begin(), sd.triplets.end());
  return sd;
}

StartingDesign oa_triplets_even(int t) {
  if (t < 4 || t % 2 == 1)
    throw std::invalid_argument("oa_triplets_even: t must be even and >= 4");
  const int m = t - 1;  // odd
  StartingDesign sd;
  sd.t = t;
  sd.method = "oa";
  for (int u = 0; u < m; ++u)
    for (int v = 1; v < m; ++v) {
      int a = u + 1, b = (u + v) % m + 1, c = (u + 2 * v) % m + 1;
      if (v == 1) {
        sd.triplets.push_back({t, b, c});
        sd.triplets.push_back({a, t, c});
        sd.triplets.push_back({a, b, t});
      } else {
        sd.triplets.push_back({a, b, c});
      }
    }
  std::sort(sd.triplets.begin(), sd.triplets.end());
  return sd;
}

StartingDesign oa_triplets(int t) {
  return (t % 2 == 1) ? oa_triplets_odd(t) : oa_triplets_even(t);
}

StartingDesign gf_triplets(int t, const Triplet& seed_labels) {
  if (!GaloisField::supported_order(t))
    throw std::invalid_argument("gf_triplets: t=" + std::to_string(t) +
                                " is not a supported prime power");
  if (seed_labels[0] == seed_labels[1] || seed_labels[0] == seed_labels[2] ||
      seed_labels[1] == seed_labels[2])
    throw std::invalid_argument("gf_triplets: seed labels must be distinct");
  for (int lab : seed_labels)
    if (lab < 1 || lab > t)
      throw std::invalid_argument("gf_triplets: seed label out of range");

  GaloisField f(t);
  // label <-> element: label i is element i for 1 <= i < t; label t is 0.
  auto elem = [&](int label) { return label == t ? 0 : label; };
  auto label = [&](int e) { return e == 0 ? t : e; };

  int x = elem(seed_labels[0]), y = elem(seed_labels[1]), z = elem(seed_labels[2]);
  StartingDesign sd;
  sd.t = t;
  sd.method = "gf";
  sd.seed = seed_labels;
  sd.polynomial = f.modulus();
  for (int a = 1; a < t; ++a)
    for (int b = 0; b < t; ++b)
      sd.triplets.push_back({label(f.add(f.mul(a, x), b)),
                             label(f.add(f.mul(a, y), b)),
                             label(f.add(f.mul(a, z), b))});
  std::sort(sd.triplets.begin(), sd.triplets.end());
  return sd;
}

TreatmentSequence expand_triplet(const Triplet& tr,
                                 const EquivalenceClass& pattern, int t) {
  if (pattern.block_count != 3)
    throw std::invalid_argument("expand_triplet: pattern must use exactly 3 labels");
  std::vector<int> entries;
  entries.reserve(pattern.k());
  for (int lab : pattern.canonical) entries.push_back(tr[lab - 1]);
  return TreatmentSequence(std::move(entries), t);
}

StartingDesign starting_design(int t, Method method, const Triplet& seed_labels) {
  return method == Method::oa ? oa_triplets(t) : gf_triplets(t, seed_labels);
}

ExactDesign build_reduced_design(int t, const EquivalenceClass& pattern,
                                 Method method, const Triplet& seed_labels) {
  StartingDesign sd = starting_design(t, method, seed_labels);
  std::vector<TreatmentSequence> rows;
  rows.reserve(sd.triplets.size());
  for (const auto& tr : sd.triplets) rows.push_back(expand_triplet(tr, pattern, t));
  return ExactDesign(std::move(rows));
}

}  // namespace xover
