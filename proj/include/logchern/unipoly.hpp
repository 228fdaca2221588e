#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "logchern/rational.hpp"

namespace logchern {

// Dense univariate polynomial over Q; coefficient i belongs to t^i. The
// leading stored coefficient is nonzero, the zero polynomial has no entries.
class UniPolyQ {
 public:
  UniPolyQ() = default;
  explicit UniPolyQ(std::vector<Rational> coeffs);
  UniPolyQ(std::initializer_list<Rational> coeffs)
      : UniPolyQ(std::vector<Rational>(coeffs)) {}
  static UniPolyQ constant(const Rational& c) { return UniPolyQ({c}); }
  // binom(t + shift, k) as a polynomial in t.
  static UniPolyQ binomial_in_t(long shift, long k);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  Rational operator()(const Rational& t) const;
  UniPolyQ operator+(const UniPolyQ& other) const;
  UniPolyQ operator-(const UniPolyQ& other) const;
  UniPolyQ operator*(const UniPolyQ& other) const;
  UniPolyQ scaled(const Rational& c) const;
  // p(t + c)
  UniPolyQ shifted(const Rational& c) const;
  // Exact division by (t - root); throws std::domain_error on a remainder.
  UniPolyQ divided_by_linear(const Rational& root) const;
  bool operator==(const UniPolyQ& other) const { return coeffs_ == other.coeffs_; }

  // Descending powers, e.g. "2/3*t^3 - 5/3*t + 2".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// p(-t); an involution.
UniPolyQ substitute_negate(const UniPolyQ& p);

// c_0 + c_1 t + ... + c_{n-1} t^{n-1} in R[t]/<t^n>. Coeff is Integer for
// Chern and Chow classes and Rational where fractions can appear.
template <class Coeff>
class TruncatedPoly {
 public:
  TruncatedPoly() = default;
  explicit TruncatedPoly(std::size_t length) : coeffs_(length, Coeff(0)) {
    if (length == 0) throw std::invalid_argument("truncation length must be positive");
  }
  TruncatedPoly(std::size_t length, std::vector<Coeff> coeffs) : TruncatedPoly(length) {
    for (std::size_t i = 0; i < coeffs.size() && i < length; ++i) coeffs_[i] = coeffs[i];
  }
  static TruncatedPoly one(std::size_t length) {
    TruncatedPoly p(length);
    p.coeffs_[0] = 1;
    return p;
  }
  // 1 + a t
  static TruncatedPoly linear(std::size_t length, const Coeff& a) {
    TruncatedPoly p = one(length);
    if (length > 1) p.coeffs_[1] = a;
    return p;
  }

  std::size_t length() const { return coeffs_.size(); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
  Coeff& operator[](std::size_t i) { return coeffs_[i]; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  TruncatedPoly operator+(const TruncatedPoly& o) const {
    check(o);
    TruncatedPoly r = *this;
    for (std::size_t i = 0; i < length(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }
  TruncatedPoly operator-(const TruncatedPoly& o) const {
    check(o);
    TruncatedPoly r = *this;
    for (std::size_t i = 0; i < length(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }
  TruncatedPoly operator*(const TruncatedPoly& o) const {
    check(o);
    TruncatedPoly r(length());
    for (std::size_t i = 0; i < length(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < length(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
  }
  TruncatedPoly scaled(const Coeff& c) const {
    TruncatedPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }
  bool operator==(const TruncatedPoly& o) const { return coeffs_ == o.coeffs_; }

  // Multiplicative inverse mod t^n. The constant term must be a unit of the
  // coefficient ring (+-1 for Integer); throws std::domain_error otherwise.
  TruncatedPoly inverse() const {
    const Coeff& c0 = coeffs_[0];
    if (c0 == 0) throw std::domain_error("constant term is zero; not invertible");
    if constexpr (std::is_same_v<Coeff, Integer>) {
      if (c0 != 1 && c0 != -1) throw std::domain_error("constant term is not a unit in Z");
    }
    TruncatedPoly r(length());
    r.coeffs_[0] = Coeff(1) / c0;
    for (std::size_t k = 1; k < length(); ++k) {
      Coeff acc = 0;
      for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
      r.coeffs_[k] = -acc / c0;
    }
    return r;
  }

  TruncatedPoly pow(long e) const {
    TruncatedPoly base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    TruncatedPoly r = one(length());
    while (n) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  // p(-t)
  TruncatedPoly negated_variable() const {
    TruncatedPoly r = *this;
    for (std::size_t i = 1; i < length(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }

  // Explicit-sign rendering in the given variable, e.g. "1 - 4h + 7h^2".
  std::string to_string(const std::string& var) const {
    std::string out;
    for (std::size_t i = 0; i < length(); ++i) {
      const Coeff& c = coeffs_[i];
      if (c == 0) continue;
      Coeff mag = c < 0 ? Coeff(-c) : c;
      std::string m = logchern::to_string(mag);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0) {
        out += m;
      } else {
        if (mag != 1) out += m;
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const TruncatedPoly& o) const {
    if (o.length() != length()) throw std::invalid_argument("truncation lengths differ");
  }
  std::vector<Coeff> coeffs_;
};

using TruncatedPolyZ = TruncatedPoly<Integer>;
using TruncatedPolyQ = TruncatedPoly<Rational>;

// Inverse mod t^n; see TruncatedPoly::inverse.
template <class Coeff>
TruncatedPoly<Coeff> truncated_mul_inv(const TruncatedPoly<Coeff>& a) {
  return a.inverse();
}

}  // namespace logchern
