#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace logchern {

// Exact coefficients. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(Rational q) {
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const Integer& z);

Integer binomial(long n, long k);

}  // namespace logchern
