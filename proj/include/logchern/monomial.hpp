#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace logchern {

inline constexpr std::size_t kMaxVars = 8;

enum class MonomialOrderKind { kGrevlex, kLex };

// Dense exponent vector over at most kMaxVars variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }
  std::vector<int> exponents() const;

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  // Requires divides(other): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && exps_ == other.exps_;
  }

  // Bit i set iff variable i occurs.
  std::uint32_t support_mask() const { return mask_; }

  std::string to_string(std::span<const std::string> names) const;

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t mask_ = 0;
  int degree_ = 0;
};

// Orders in which "greater" means "leads". Both refine divisibility and are
// compatible with multiplication.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    MonomialOrderKind kind) {
  if (kind == MonomialOrderKind::kGrevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// All monomials of the given total degree, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

// x, y, z, w for up to four variables, z1..zn beyond that.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace logchern
