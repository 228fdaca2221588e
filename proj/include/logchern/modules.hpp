#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "logchern/groebner.hpp"
#include "logchern/unipoly.hpp"

namespace logchern {

// Cokernel of the homogeneous map sum S(-b_k) -> target whose columns are
// `relations`: M = target / <relations>.
struct GradedModulePresentation {
  GradedFreeModule target;
  std::vector<FreeModuleElement> relations;

  std::size_t nvars() const { return target.nvars; }
  static GradedModulePresentation free(const GradedFreeModule& f) { return {f, {}}; }
  // Degrees of the relations (zero relations are skipped).
  GradedFreeModule relation_module() const;
};

// M(k): the degree-d piece of M(k) is the degree-(k+d) piece of M.
GradedModulePresentation twist(const GradedModulePresentation& m, int k);

// Presentation of the submodule of `ambient` generated by `gens`, on a
// minimal generating subset.
GradedModulePresentation presentation_of_submodule(const GradedFreeModule& ambient,
                                                   std::span<const FreeModuleElement> gens);

// Presentation of K / B for submodules B <= K of `ambient` given by
// generators (generators of K are minimalized first).
GradedModulePresentation subquotient(const GradedFreeModule& ambient,
                                     std::span<const FreeModuleElement> k_gens,
                                     std::span<const FreeModuleElement> b_gens);

// Minimal generating subset of a homogeneous submodule, in input order.
std::vector<FreeModuleElement> minimal_generators(const GradedFreeModule& ambient,
                                                  std::span<const FreeModuleElement> gens);

// F_0 <- F_1 <- F_2 <- ...; maps[i] lists the images of the basis of
// terms[i+1] in terms[i].
struct ResolutionData {
  std::vector<GradedFreeModule> terms;
  std::vector<std::vector<FreeModuleElement>> maps;
  bool minimal = false;

  // Number of nonzero maps (projective dimension for minimal resolutions).
  std::size_t length() const { return maps.size(); }
  // Twist multiset of term i as {k : multiplicity} with S(k) summands
  // (k = -a for S(-a)).
  std::map<int, int> twist_multiset(std::size_t i) const;
};

// Minimal graded free resolution (or just the raw iterated kernels when
// `minimal` is false). Throws std::runtime_error if it needs more than
// max_len maps.
ResolutionData free_resolution(const GradedModulePresentation& m, std::size_t max_len,
                               bool minimal = true);
ResolutionData free_resolution(const GradedModulePresentation& m);

// Adds a trivial summand S(-a) --id--> S(-a) between terms[i+1] and terms[i].
ResolutionData pad_resolution(const ResolutionData& r, std::size_t i, int a);

// Sanity checks used by tests and reports: consecutive maps compose to zero.
bool maps_compose_to_zero(const ResolutionData& r);

// Removes basis vectors killed by relations with a unit entry.
GradedModulePresentation prune(const GradedModulePresentation& m);

// Hilbert data. Hilbert functions count standard monomials of the leading-term
// module of the relations' Groebner basis.
class HilbertData {
 public:
  explicit HilbertData(const GradedModulePresentation& m);
  long function(int degree) const;
  // -1 for the zero module.
  int krull_dim() const;
  const GroebnerBasis& basis() const { return gb_; }

 private:
  GradedModulePresentation m_;
  GroebnerBasis gb_;
};

long hilbert_function(const GradedModulePresentation& m, int degree);
std::vector<long> hilbert_function_range(const GradedModulePresentation& m, int from, int to);
// Hilbert function of a free module sum S(-a_j) in degree d.
long hilbert_function(const GradedFreeModule& f, int degree);
// Alternating sum of binom(t - a + n - 1, n - 1) over a minimal resolution.
UniPolyQ hilbert_polynomial(const GradedModulePresentation& m);
UniPolyQ hilbert_polynomial(const ResolutionData& r, std::size_t nvars);
int krull_dim(const GradedModulePresentation& m);
// Total vector-space dimension; throws std::domain_error when the module is
// not of finite length or the degree cap is exceeded.
long finite_length(const GradedModulePresentation& m, int degree_cap = 200);

// Hom_S(M, S) as a presentation of the kernel of the transposed
// presentation matrix.
GradedModulePresentation module_dual(const GradedModulePresentation& m);
// Ext^1_S(M, S) from the dualized minimal resolution.
GradedModulePresentation ext1_against_ring(const GradedModulePresentation& m);

}  // namespace logchern
