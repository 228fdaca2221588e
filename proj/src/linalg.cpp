#include "logchern/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace logchern {

RowEchelon rref(RationalMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational k = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t matrix_rank(const RationalMatrix& m, std::size_t cols) { return rref(m, cols).rank(); }

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  RowEchelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<long> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  if (g == 0) throw std::invalid_argument("zero vector");
  int sign = 0;
  for (const auto& z : ints)
    if (z != 0) {
      sign = z > 0 ? 1 : -1;
      break;
    }
  std::vector<long> out;
  for (const auto& z : ints) out.push_back(static_cast<long>(to_int64(sign * z / g)));
  return out;
}

std::vector<long> primitive_integer_vector(const std::vector<long>& v) {
  std::vector<Rational> q(v.begin(), v.end());
  return primitive_integer_vector(q);
}

}  // namespace logchern
