#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logchern/monomial.hpp"
#include "logchern/multipoly.hpp"

namespace logchern {

// F = sum_j S(-twists[j]) over S = Q[z_1..z_nvars]. Basis vector e_j has
// degree twists[j], so z^m e_j has degree |m| + twists[j].
struct GradedFreeModule {
  std::size_t nvars = 0;
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  static GradedFreeModule free(std::size_t nvars, std::size_t rank, int twist = 0) {
    return {nvars, std::vector<int>(rank, twist)};
  }
  bool operator==(const GradedFreeModule&) const = default;
};

// Element of a free module as a column of polynomials.
struct FreeModuleElement {
  std::vector<MultiPoly> components;

  static FreeModuleElement zero(const GradedFreeModule& f);
  static FreeModuleElement unit(const GradedFreeModule& f, std::size_t j);
  static FreeModuleElement from_poly(const MultiPoly& p) { return {{p}}; }

  std::size_t size() const { return components.size(); }
  bool is_zero() const;
  // Degree in f; nullopt for the zero element. Throws std::invalid_argument
  // if the element is not homogeneous.
  std::optional<int> degree(const GradedFreeModule& f) const;
  bool is_homogeneous(const GradedFreeModule& f) const;

  FreeModuleElement operator+(const FreeModuleElement& o) const;
  FreeModuleElement operator-(const FreeModuleElement& o) const;
  FreeModuleElement times(const MultiPoly& p) const;
  bool operator==(const FreeModuleElement& o) const = default;

  std::string to_string(std::span<const std::string> names) const;
};

// sum_i coeffs[i] * vectors[i]
FreeModuleElement linear_combination(const GradedFreeModule& f,
                                     std::span<const FreeModuleElement> vectors,
                                     std::span<const MultiPoly> coeffs);

enum class PositionPolicy { kPositionOverTerm, kTermOverPosition };

// Order on module terms z^m e_j. Positions in a higher block always lead
// (elimination); inside a block either the position decides first (POT) or
// the twisted degree, then the monomial order, then the position (TOP). A
// smaller position index leads.
struct ModuleOrder {
  MonomialOrderKind monomial = MonomialOrderKind::kGrevlex;
  PositionPolicy policy = PositionPolicy::kTermOverPosition;
  std::vector<int> twists;
  std::vector<int> blocks;

  static ModuleOrder for_module(const GradedFreeModule& f,
                                PositionPolicy policy = PositionPolicy::kTermOverPosition,
                                MonomialOrderKind kind = MonomialOrderKind::kGrevlex) {
    return {kind, policy, f.twists, {}};
  }

  std::strong_ordering compare(const Monomial& a, std::uint32_t pa, const Monomial& b,
                               std::uint32_t pb) const {
    if (!blocks.empty() && blocks[pa] != blocks[pb]) return blocks[pa] <=> blocks[pb];
    if (policy == PositionPolicy::kPositionOverTerm) {
      if (pa != pb) return pb <=> pa;
      return logchern::compare(a, b, monomial);
    }
    if (monomial == MonomialOrderKind::kGrevlex) {
      int da = a.degree() + twists[pa];
      int db = b.degree() + twists[pb];
      if (da != db) return da <=> db;
    }
    auto c = logchern::compare(a, b, monomial);
    if (c != 0) return c;
    return pb <=> pa;
  }
};

// Module term in the engine's flat representation.
struct ModTerm {
  Monomial m;
  std::uint32_t pos = 0;
  Rational c;
};
using ModVec = std::vector<ModTerm>;

// Reduced Groebner basis of a submodule of a graded free module. Elements are
// monic, tail-reduced and sorted by ascending leading term.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(GradedFreeModule module, ModuleOrder order, std::vector<ModVec> elements);

  const GradedFreeModule& module() const { return module_; }
  const ModuleOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<ModVec>& raw() const { return elements_; }
  std::vector<FreeModuleElement> elements() const;
  FreeModuleElement element(std::size_t i) const;

  // Leading monomials that sit in position j.
  std::vector<Monomial> leading_monomials(std::size_t position) const;

 private:
  GradedFreeModule module_;
  ModuleOrder order_;
  std::vector<ModVec> elements_;
};

// Process-wide counters for reporting.
struct EngineStats {
  std::atomic<std::uint64_t> spairs_reduced{0};
  std::atomic<std::uint64_t> zero_reductions{0};
  std::atomic<int> max_degree{0};
  void reset() {
    spairs_reduced = 0;
    zero_reductions = 0;
    max_degree = 0;
  }
};
EngineStats& engine_stats();

ModVec to_modvec(const FreeModuleElement& v, const ModuleOrder& order);
FreeModuleElement from_modvec(const ModVec& v, const GradedFreeModule& f, const ModuleOrder& order);

// Buchberger with the Gebauer-Moeller criteria and degree-by-degree (normal)
// pair selection. The product criterion is only used for ideals (rank 1).
GroebnerBasis groebner_basis(const GradedFreeModule& f, std::span<const FreeModuleElement> gens,
                             const ModuleOrder& order);
GroebnerBasis groebner_basis(const GradedFreeModule& f, std::span<const FreeModuleElement> gens);
// Ideal convenience overload: rank-1 module with twist 0.
GroebnerBasis groebner_basis(std::span<const MultiPoly> gens,
                             MonomialOrderKind kind = MonomialOrderKind::kGrevlex);

FreeModuleElement normal_form(const FreeModuleElement& v, const GroebnerBasis& gb);
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

// Kernel of the map sum_i S(-source.twists[i]) -> target sending e_i to
// columns[i]. Columns must be homogeneous of degree source.twists[i] (or
// zero). Computed as the source part of a Groebner basis of the graph module
// under an order that eliminates the target positions; the result is a
// Groebner basis of the kernel.
std::vector<FreeModuleElement> kernel(const GradedFreeModule& source,
                                      const GradedFreeModule& target,
                                      std::span<const FreeModuleElement> columns);

// Generators of the first syzygy module of the basis elements, as vectors in
// sum_i S(-deg g_i).
std::vector<FreeModuleElement> syzygies(const GroebnerBasis& gb);
GradedFreeModule syzygy_source(const GroebnerBasis& gb);

// Indices of a minimal homogeneous generating subset (inputs are processed in
// order of degree; ties keep the earlier input).
std::vector<std::size_t> minimal_generator_indices(const GradedFreeModule& f,
                                                   std::span<const FreeModuleElement> gens);

}  // namespace logchern
