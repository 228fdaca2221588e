#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logchern/monomial.hpp"
#include "logchern/rational.hpp"

namespace logchern {

// Polynomial over Q in a fixed number of variables. Terms are kept sorted in
// descending order for the polynomial's monomial order with no zero
// coefficients, so equal polynomials have identical term sequences.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars,
                     MonomialOrderKind order = MonomialOrderKind::kGrevlex);
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Monomial& m, const Rational& c);
  // Linear form sum_i coeffs[i] * z_i.
  static MultiPoly linear_form(std::span<const long> coeffs);
  // Accepts unsorted terms with repeats; combines and canonicalizes.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms,
                              MonomialOrderKind order = MonomialOrderKind::kGrevlex);

  std::size_t nvars() const { return nvars_; }
  MonomialOrderKind order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Monomial& m, const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& other) { return *this = *this + other; }
  MultiPoly& operator-=(const MultiPoly& other) { return *this = *this - other; }
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

  MultiPoly derivative(std::size_t var) const;
  // Degree-d homogeneous component.
  MultiPoly homogeneous_part(int d) const;
  // Substitutes values (one per variable).
  Rational evaluate(std::span<const Rational> point) const;
  // Substitutes a polynomial for every variable (same target arity).
  MultiPoly compose(std::span<const MultiPoly> images) const;
  MultiPoly with_order(MonomialOrderKind order) const;

  bool operator==(const MultiPoly& other) const;

  // Descending term order with explicit signs, e.g. "x^2 - 1/2*y*z + 3".
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  void check_arity(const MultiPoly& other) const;

  std::size_t nvars_ = 0;
  MonomialOrderKind order_ = MonomialOrderKind::kGrevlex;
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

}  // namespace logchern
