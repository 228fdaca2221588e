#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logchern/linalg.hpp"
#include "logchern/rational.hpp"

namespace logchern {

// Hyperplanes {normals[i] . z = constants[i]} in C^dim. Central arrangements
// have no constants. Normals are primitive with a positive first nonzero
// entry (for affine ones the pair (normal, constant) is primitive).
struct Arrangement {
  std::size_t dim = 0;
  std::vector<std::vector<long>> normals;
  std::vector<long> constants;
  std::vector<std::string> labels;
  bool affine = false;

  std::size_t size() const { return normals.size(); }
  bool operator==(const Arrangement&) const = default;
};

// Validates and normalizes. Throws InputError on a zero normal, a length
// mismatch or a repeated hyperplane.
Arrangement make_central(std::size_t dim, std::vector<std::vector<long>> normals,
                         std::vector<std::string> labels = {});
Arrangement make_affine(std::size_t dim, std::vector<std::vector<long>> normals,
                        std::vector<long> constants, std::vector<std::string> labels = {});

// {"l": int, "hyperplanes": [[int,...],...], "labels": [...]?, "constants": [...]?}
Arrangement parse_arrangement(std::string_view json_text);
Arrangement load_arrangement(const std::string& path);
std::string arrangement_to_json(const Arrangement& a);
// Linear forms rendered like "x - w".
std::string hyperplane_to_string(const Arrangement& a, std::size_t i);

struct Flat {
  std::vector<std::size_t> hyperplanes;  // closed index set, ascending
  RationalMatrix equations;              // RREF rows (augmented in affine mode)
  RationalMatrix subspace;               // basis of the subspace (central mode)
  int codim = 0;
  long mu = 0;                           // filled in by mobius()
};

class IntersectionLattice {
 public:
  IntersectionLattice() = default;
  IntersectionLattice(std::size_t dim, bool affine, std::vector<std::vector<Flat>> levels)
      : dim_(dim), affine_(affine), levels_(std::move(levels)) {}

  std::size_t dim() const { return dim_; }
  bool affine() const { return affine_; }
  // Largest codimension present.
  int rank() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<Flat>& flats(int codim) const;
  std::vector<Flat>& mutable_flats(int codim) { return levels_.at(codim); }
  std::size_t size() const;
  const Flat* find(const std::vector<std::size_t>& hyperplanes) const;
  // Y <= X in the lattice order (X is contained in Y as subspaces).
  static bool below(const Flat& y, const Flat& x);

 private:
  std::size_t dim_ = 0;
  bool affine_ = false;
  std::vector<std::vector<Flat>> levels_;
};

// Flats grouped by codimension, each level sorted by index set. Affine
// arrangements only keep nonempty intersections.
IntersectionLattice build_lattice(const Arrangement& a);
IntersectionLattice mobius(IntersectionLattice lat);
// Closure of a set of hyperplanes (all hyperplanes containing the
// intersection); nullopt for an empty affine intersection.
std::optional<std::vector<std::size_t>> closure(const Arrangement& a,
                                                const std::vector<std::size_t>& hyperplanes);

struct PoincarePoly {
  std::vector<Integer> b;

  Integer operator()(long t) const;
  bool operator==(const PoincarePoly&) const = default;
  // "1 + 7t + 18t^2 + 17t^3"
  std::string to_string() const;
  // "(1+t)^k" when the polynomial is a power of 1+t, otherwise to_string().
  std::string factored_string() const;
};

PoincarePoly poincare_affine(const Arrangement& a);
PoincarePoly poincare_affine(const IntersectionLattice& lat);
// pi(A, t) / (1 + t); needs a central arrangement with at least one
// hyperplane.
PoincarePoly poincare_projective(const Arrangement& a);
PoincarePoly poincare_projective(const PoincarePoly& affine_pi);

// Restriction to {normals[h] . z = 1} in coordinates dropping the first
// coordinate where normals[h] is nonzero.
Arrangement decone(const Arrangement& a, std::size_t h);
// {H : X subset H}, kept in the ambient dimension.
Arrangement localize(const Arrangement& a, const Flat& x);
// Restriction to a complement of the center.
Arrangement essentialize(const Arrangement& a);
int arrangement_rank(const Arrangement& a);

}  // namespace logchern
