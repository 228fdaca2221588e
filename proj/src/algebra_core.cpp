#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "logchern/monomial.hpp"
#include "logchern/multipoly.hpp"
#include "logchern/rational.hpp"
#include "logchern/unipoly.hpp"

namespace logchern {

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part, 10) != 0)
      throw std::invalid_argument("malformed rational: '" + part + "'");
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(from_exponents(std::vector<int>(exponents))) {}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff)
      throw std::invalid_argument("exponent out of range");
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  m.refresh();
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  m.refresh();
  return m;
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    degree_ += exps_[i];
    if (exps_[i]) mask_ |= 1u << i;
  }
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  r.mask_ = mask_ | other.mask_;
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.refresh();
  return r;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!exps_[i]) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Enumerate compositions of degree into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, MonomialOrderKind::kGrevlex) > 0;
  });
  return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  static const char* const kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i)
    names.push_back(nvars <= 4 ? std::string(kShort[i]) : "z" + std::to_string(i + 1));
  return names;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(std::size_t nvars, MonomialOrderKind order) : nvars_(nvars), order_(order) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index), 1);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(m.nvars());
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::linear_form(std::span<const long> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.emplace_back(Monomial::variable(coeffs.size(), i), Rational(coeffs[i]));
  return from_terms(coeffs.size(), std::move(terms));
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms,
                                MonomialOrderKind order) {
  MultiPoly p(nvars, order);
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compare(a.first, b.first, order) > 0;
  });
  for (auto& t : terms) {
    if (t.first.nvars() != nvars) throw std::invalid_argument("monomial arity mismatch");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.degree() != terms_.front().first.degree()) return false;
  return true;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  check_arity(other);
  MultiPoly r(nvars_, order_);
  const MultiPoly& b = other.order_ == order_ ? other : other.with_order(order_);
  r.terms_.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      r.terms_.push_back(b.terms_[j++]);
      continue;
    }
    auto c = compare(terms_[i].first, b.terms_[j].first, order_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = terms_[i].second + b.terms_[j].second;
      if (s != 0) r.terms_.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return *this + (-other); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(nvars_, order_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Rational& c) const {
  MultiPoly r(nvars_, order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_arity(other);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc.emplace_back(a.first * b.first, a.second * b.second);
  return from_terms(nvars_, std::move(acc), order_);
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    int e = t.first[var];
    if (e == 0) continue;
    auto ex = t.first.exponents();
    ex[var] -= 1;
    acc.emplace_back(Monomial::from_exponents(ex), t.second * e);
  }
  return from_terms(nvars_, std::move(acc), order_);
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(nvars_, order_);
  for (const auto& t : terms_)
    if (t.first.degree() == d) r.terms_.push_back(t);
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.second;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < t.first[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  MultiPoly total(target, order_);
  for (const auto& t : terms_) {
    MultiPoly v = MultiPoly::constant(target, t.second);
    for (std::size_t i = 0; i < nvars_; ++i) v *= pow(images[i], static_cast<unsigned>(t.first[i]));
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::with_order(MonomialOrderKind order) const {
  if (order == order_) return *this;
  return from_terms(nvars_, terms_, order);
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) return false;
  if (order_ == other.order_) return terms_ == other.terms_;
  return terms_ == other.with_order(order_).terms_;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += logchern::to_string(mag);
    } else {
      if (mag != 1) out += logchern::to_string(mag) + "*";
      out += m.to_string(names);
    }
  }
  return out;
}

std::string MultiPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
  MultiPoly r = MultiPoly::constant(p.nvars(), 1);
  MultiPoly base = p;
  while (exponent) {
    if (exponent & 1) r *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// UniPolyQ

UniPolyQ::UniPolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPolyQ UniPolyQ::binomial_in_t(long shift, long k) {
  if (k < 0) return {};
  UniPolyQ r = UniPolyQ::constant(1);
  Rational fact = 1;
  for (long j = 0; j < k; ++j) {
    r = r * UniPolyQ({Rational(shift - j), Rational(1)});
    fact *= (j + 1);
  }
  return r.scaled(1 / fact);
}

Rational UniPolyQ::operator()(const Rational& t) const {
  Rational v = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
  return v;
}

UniPolyQ UniPolyQ::operator+(const UniPolyQ& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return UniPolyQ(std::move(c));
}

UniPolyQ UniPolyQ::operator-(const UniPolyQ& other) const { return *this + other.scaled(-1); }

UniPolyQ UniPolyQ::operator*(const UniPolyQ& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return UniPolyQ(std::move(c));
}

UniPolyQ UniPolyQ::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return UniPolyQ(std::move(out));
}

UniPolyQ UniPolyQ::shifted(const Rational& c) const {
  // Horner in the polynomial t + c.
  UniPolyQ r;
  UniPolyQ lin({c, Rational(1)});
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * lin + UniPolyQ::constant(coeffs_[i]);
  return r;
}

UniPolyQ UniPolyQ::divided_by_linear(const Rational& root) const {
  if (is_zero()) return {};
  std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
  Rational carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Rational v = coeffs_[i] + carry * root;
    if (i == 0) {
      if (v != 0) throw std::domain_error("division by linear factor is not exact");
    } else {
      q[i - 1] = v;
    }
    carry = v;
  }
  return UniPolyQ(std::move(q));
}

std::string UniPolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += logchern::to_string(mag);
    } else {
      if (mag != 1) out += logchern::to_string(mag) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UniPolyQ substitute_negate(const UniPolyQ& p) {
  std::vector<Rational> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return UniPolyQ(std::move(c));
}

}  // namespace logchern
