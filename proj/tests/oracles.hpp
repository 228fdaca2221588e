#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's lattice or linear algebra code.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Row = std::vector<mpz_class>;

// Fraction-free elimination over Z.
inline int rank_of(std::vector<Row> m) {
  if (m.empty()) return 0;
  std::size_t cols = m.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpz_class a = m[r][c], b = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
    }
    ++r;
  }
  return r;
}

struct Hyperplanes {
  std::vector<std::vector<long>> normals;
  std::vector<long> constants;  // empty when central
};

inline std::vector<Row> rows(const Hyperplanes& h, const std::vector<std::size_t>& idx, bool augmented) {
  std::vector<Row> out;
  for (auto i : idx) {
    Row r(h.normals[i].begin(), h.normals[i].end());
    if (augmented) r.emplace_back(h.constants[i]);
    out.push_back(std::move(r));
  }
  return out;
}

inline bool nonempty(const Hyperplanes& h, const std::vector<std::size_t>& idx) {
  if (h.constants.empty() || idx.empty()) return true;
  return rank_of(rows(h, idx, false)) == rank_of(rows(h, idx, true));
}

inline int rank_of(const Hyperplanes& h, const std::vector<std::size_t>& idx) {
  return rank_of(rows(h, idx, false));
}

inline std::vector<std::size_t> subset(unsigned long mask, std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) s.push_back(i);
  return s;
}

// All flats by brute force over the 2^n subsets: codim -> set of closed
// index sets.
inline std::map<int, std::set<std::vector<std::size_t>>> lattice(const Hyperplanes& h) {
  std::size_t n = h.normals.size();
  bool aug = !h.constants.empty();
  std::map<int, std::set<std::vector<std::size_t>>> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    auto s = subset(mask, n);
    if (!nonempty(h, s)) continue;
    int r = rank_of(rows(h, s, aug));
    std::vector<std::size_t> closed;
    for (std::size_t j = 0; j < n; ++j) {
      auto t = s;
      t.push_back(j);
      if (rank_of(rows(h, t, aug)) == r) closed.push_back(j);
    }
    out[rank_of(h, s)].insert(closed);
  }
  return out;
}

// Whitney's formula: pi(t) = sum over subsets with nonempty intersection of
// (-1)^{|S|} (-t)^{rank S}.
inline std::vector<mpz_class> poincare(const Hyperplanes& h) {
  std::size_t n = h.normals.size();
  std::vector<mpz_class> b(h.normals.empty() ? 1 : h.normals.front().size() + 1, 0);
  if (b.size() == 1 && n == 0) b = {1};
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    auto s = subset(mask, n);
    if (!nonempty(h, s)) continue;
    int r = rank_of(h, s);
    int sign = ((s.size() + r) % 2) ? -1 : 1;
    b[r] += sign;
  }
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

// Random central arrangement with pairwise non-proportional primitive
// normals.
inline std::vector<std::vector<long>> random_central(std::mt19937& rng, std::size_t l, std::size_t n) {
  std::uniform_int_distribution<long> c(-2, 2);
  std::vector<std::vector<long>> out;
  auto proportional = [](const std::vector<long>& a, const std::vector<long>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
  };
  int guard = 0;
  while (out.size() < n && guard++ < 10000) {
    std::vector<long> v(l);
    for (auto& x : v) x = c(rng);
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) continue;
    bool dup = false;
    for (const auto& w : out) dup = dup || proportional(v, w);
    if (!dup) out.push_back(v);
  }
  return out;
}

}  // namespace oracle
