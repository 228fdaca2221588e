#pragma once

#include <cstddef>
#include <vector>

#include "logchern/rational.hpp"

namespace logchern {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;  // nonzero rows of the reduced row-echelon form
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row-echelon form; every row must have `cols` entries.
RowEchelon rref(RationalMatrix m, std::size_t cols);
std::size_t matrix_rank(const RationalMatrix& m, std::size_t cols);
// Basis of {v : m v = 0}, one vector per free column.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);
// Clears denominators and divides by the content; the first nonzero entry is
// made positive. Throws std::invalid_argument for the zero vector.
std::vector<long> primitive_integer_vector(const std::vector<Rational>& v);
std::vector<long> primitive_integer_vector(const std::vector<long>& v);

}  // namespace logchern
