#include "logchern/modules.hpp"

#include <algorithm>
#include <stdexcept>

namespace logchern {

namespace {

GradedFreeModule degrees_of(std::size_t nvars, const GradedFreeModule& ambient,
                            std::span<const FreeModuleElement> gens) {
  GradedFreeModule src{nvars, {}};
  for (const auto& g : gens) {
    auto d = g.degree(ambient);
    if (!d) throw std::invalid_argument("zero generator has no degree");
    src.twists.push_back(*d);
  }
  return src;
}

std::vector<FreeModuleElement> nonzero(std::span<const FreeModuleElement> v) {
  std::vector<FreeModuleElement> out;
  for (const auto& x : v)
    if (!x.is_zero()) out.push_back(x);
  return out;
}

GradedFreeModule dual_of(const GradedFreeModule& f) {
  GradedFreeModule d{f.nvars, f.twists};
  for (auto& a : d.twists) a = -a;
  return d;
}

// Rows of a map (columns `cols` in `target`) viewed as elements of the dual
// of its source: row j = (cols[k][j])_k.
std::vector<FreeModuleElement> transpose(std::span<const FreeModuleElement> cols, std::size_t rows,
                                         std::size_t nvars) {
  std::vector<FreeModuleElement> out(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    out[j].components.reserve(cols.size());
    for (const auto& c : cols) out[j].components.push_back(j < c.size() ? c.components[j] : MultiPoly(nvars));
  }
  return out;
}

}  // namespace

GradedFreeModule GradedModulePresentation::relation_module() const {
  return degrees_of(target.nvars, target, nonzero(relations));
}

GradedModulePresentation twist(const GradedModulePresentation& m, int k) {
  GradedModulePresentation out = m;
  for (auto& a : out.target.twists) a -= k;
  return out;
}

std::vector<FreeModuleElement> minimal_generators(const GradedFreeModule& ambient,
                                                  std::span<const FreeModuleElement> gens) {
  std::vector<FreeModuleElement> out;
  for (std::size_t i : minimal_generator_indices(ambient, gens)) out.push_back(gens[i]);
  return out;
}

GradedModulePresentation presentation_of_submodule(const GradedFreeModule& ambient,
                                                   std::span<const FreeModuleElement> gens) {
  std::vector<FreeModuleElement> mins = minimal_generators(ambient, gens);
  GradedFreeModule source = degrees_of(ambient.nvars, ambient, mins);
  std::vector<FreeModuleElement> rels = kernel(source, ambient, mins);
  return {source, minimal_generators(source, rels)};
}

GradedModulePresentation subquotient(const GradedFreeModule& ambient,
                                     std::span<const FreeModuleElement> k_gens,
                                     std::span<const FreeModuleElement> b_gens) {
  std::vector<FreeModuleElement> ks = minimal_generators(ambient, k_gens);
  std::vector<FreeModuleElement> bs = nonzero(b_gens);
  GradedFreeModule k_source = degrees_of(ambient.nvars, ambient, ks);
  std::vector<FreeModuleElement> cols = ks;
  cols.insert(cols.end(), bs.begin(), bs.end());
  GradedFreeModule source = degrees_of(ambient.nvars, ambient, cols);
  std::vector<FreeModuleElement> ker = kernel(source, ambient, cols);
  std::vector<FreeModuleElement> rels;
  for (auto& v : ker) {
    FreeModuleElement part;
    part.components.assign(v.components.begin(), v.components.begin() + static_cast<long>(ks.size()));
    if (!part.is_zero()) rels.push_back(std::move(part));
  }
  return {k_source, minimal_generators(k_source, rels)};
}

GradedModulePresentation prune(const GradedModulePresentation& m) {
  GradedModulePresentation p{m.target, nonzero(m.relations)};
  const std::size_t nvars = m.nvars();
  while (true) {
    std::size_t ri = p.relations.size(), pj = 0;
    for (std::size_t r = 0; r < p.relations.size() && ri == p.relations.size(); ++r) {
      for (std::size_t j = 0; j < p.target.rank(); ++j) {
        const MultiPoly& c = p.relations[r].components[j];
        if (!c.is_zero() && c.is_constant()) {
          ri = r;
          pj = j;
          break;
        }
      }
    }
    if (ri == p.relations.size()) break;
    const FreeModuleElement pivot = p.relations[ri];
    const Rational c = pivot.components[pj].leading_term().second;
    std::vector<FreeModuleElement> next;
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      if (r == ri) continue;
      FreeModuleElement v = p.relations[r];
      const MultiPoly& q = v.components[pj];
      if (!q.is_zero()) v = v - pivot.times(q.scaled(1 / c));
      v.components.erase(v.components.begin() + static_cast<long>(pj));
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    p.target.twists.erase(p.target.twists.begin() + static_cast<long>(pj));
    p.relations = std::move(next);
  }
  (void)nvars;
  return p;
}

std::map<int, int> ResolutionData::twist_multiset(std::size_t i) const {
  std::map<int, int> out;
  for (int a : terms.at(i).twists) ++out[-a];
  return out;
}

ResolutionData free_resolution(const GradedModulePresentation& m, std::size_t max_len, bool minimal) {
  GradedModulePresentation p = minimal ? prune(m) : GradedModulePresentation{m.target, nonzero(m.relations)};
  ResolutionData res;
  res.minimal = minimal;
  res.terms.push_back(p.target);
  std::vector<FreeModuleElement> cols = p.relations;
  if (minimal) cols = minimal_generators(p.target, cols);
  GradedFreeModule target = p.target;
  while (!cols.empty()) {
    if (res.maps.size() >= max_len)
      throw std::runtime_error("free resolution exceeded the maximal length " + std::to_string(max_len));
    GradedFreeModule source = degrees_of(target.nvars, target, cols);
    res.terms.push_back(source);
    res.maps.push_back(cols);
    std::vector<FreeModuleElement> ker = kernel(source, target, cols);
    if (minimal) ker = minimal_generators(source, ker);
    target = source;
    cols = std::move(ker);
  }
  return res;
}

ResolutionData free_resolution(const GradedModulePresentation& m) {
  return free_resolution(m, m.nvars() + 1, true);
}

ResolutionData pad_resolution(const ResolutionData& r, std::size_t i, int a) {
  if (i >= r.terms.size()) throw std::out_of_range("pad position beyond resolution");
  ResolutionData out = r;
  out.minimal = false;
  const std::size_t nvars = r.terms.front().nvars;
  if (i + 1 == out.terms.size()) {
    out.terms.push_back(GradedFreeModule{nvars, {}});
    out.maps.emplace_back();
  }
  // New summand in terms[i] maps to zero in terms[i-1].
  out.terms[i].twists.push_back(a);
  if (i > 0) {
    FreeModuleElement z = FreeModuleElement::zero(out.terms[i - 1]);
    out.maps[i - 1].push_back(z);
  }
  for (auto& col : out.maps[i]) col.components.emplace_back(nvars);
  out.terms[i + 1].twists.push_back(a);
  out.maps[i].push_back(FreeModuleElement::unit(out.terms[i], out.terms[i].rank() - 1));
  if (i + 1 < out.maps.size()) {
    for (auto& col : out.maps[i + 1]) col.components.emplace_back(nvars);
  }
  return out;
}

bool maps_compose_to_zero(const ResolutionData& r) {
  for (std::size_t i = 1; i < r.maps.size(); ++i) {
    for (const auto& col : r.maps[i]) {
      std::vector<MultiPoly> coeffs = col.components;
      FreeModuleElement img = linear_combination(r.terms[i - 1], r.maps[i - 1], coeffs);
      if (!img.is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hilbert data

HilbertData::HilbertData(const GradedModulePresentation& m) : m_(m) {
  std::vector<FreeModuleElement> rels = nonzero(m.relations);
  gb_ = groebner_basis(m.target, rels);
}

long hilbert_function(const GradedFreeModule& f, int degree) {
  long total = 0;
  const long n = static_cast<long>(f.nvars);
  for (int a : f.twists) {
    long k = degree - a;
    if (k < 0) continue;
    total += to_int64(binomial(k + n - 1, n - 1));
  }
  return total;
}

long HilbertData::function(int degree) const {
  long total = 0;
  const auto& f = m_.target;
  for (std::size_t j = 0; j < f.rank(); ++j) {
    int k = degree - f.twists[j];
    if (k < 0) continue;
    std::vector<Monomial> lts = gb_.leading_monomials(j);
    if (lts.empty()) {
      total += to_int64(binomial(k + static_cast<long>(f.nvars) - 1, static_cast<long>(f.nvars) - 1));
      continue;
    }
    for (const auto& mono : monomials_of_degree(f.nvars, k)) {
      bool standard = std::none_of(lts.begin(), lts.end(), [&](const Monomial& l) { return l.divides(mono); });
      if (standard) ++total;
    }
  }
  return total;
}

int HilbertData::krull_dim() const {
  const auto& f = m_.target;
  const std::size_t n = f.nvars;
  int best = -1;
  for (std::size_t j = 0; j < f.rank(); ++j) {
    std::vector<Monomial> lts = gb_.leading_monomials(j);
    if (std::any_of(lts.begin(), lts.end(), [](const Monomial& l) { return l.is_one(); })) continue;
    // Largest set of variables supporting no leading monomial.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      int size = __builtin_popcount(mask);
      if (size <= best) continue;
      bool free_set = std::none_of(lts.begin(), lts.end(), [&](const Monomial& l) {
        return (l.support_mask() & ~mask) == 0;
      });
      if (free_set) best = size;
    }
  }
  return best;
}

long hilbert_function(const GradedModulePresentation& m, int degree) {
  return HilbertData(m).function(degree);
}

std::vector<long> hilbert_function_range(const GradedModulePresentation& m, int from, int to) {
  HilbertData h(m);
  std::vector<long> out;
  for (int d = from; d <= to; ++d) out.push_back(h.function(d));
  return out;
}

UniPolyQ hilbert_polynomial(const ResolutionData& r, std::size_t nvars) {
  UniPolyQ total;
  const long n = static_cast<long>(nvars);
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    UniPolyQ term;
    for (int a : r.terms[i].twists) term = term + UniPolyQ::binomial_in_t(-a + n - 1, n - 1);
    total = (i % 2 == 0) ? total + term : total - term;
  }
  return total;
}

UniPolyQ hilbert_polynomial(const GradedModulePresentation& m) {
  return hilbert_polynomial(free_resolution(m), m.nvars());
}

int krull_dim(const GradedModulePresentation& m) { return HilbertData(m).krull_dim(); }

long finite_length(const GradedModulePresentation& m, int degree_cap) {
  HilbertData h(m);
  int dim = h.krull_dim();
  if (dim > 0) throw std::domain_error("module is not of finite length (Krull dimension " + std::to_string(dim) + ")");
  if (dim < 0) return 0;
  const auto& f = m.target;
  int lo = INT32_MAX, hi = INT32_MIN;
  for (std::size_t j = 0; j < f.rank(); ++j) {
    std::vector<Monomial> lts = h.basis().leading_monomials(j);
    if (std::any_of(lts.begin(), lts.end(), [](const Monomial& l) { return l.is_one(); })) continue;
    int top = 0;
    for (std::size_t v = 0; v < f.nvars; ++v) {
      int pure = INT32_MAX;
      for (const auto& l : lts)
        if (l.support_mask() == (1u << v)) pure = std::min(pure, l[v]);
      if (pure == INT32_MAX) throw std::logic_error("zero-dimensional staircase without pure power");
      top += pure - 1;
    }
    lo = std::min(lo, f.twists[j]);
    hi = std::max(hi, f.twists[j] + top);
  }
  if (hi > degree_cap) throw std::domain_error("finite_length: degree cap exceeded");
  long total = 0;
  for (int d = lo; d <= hi; ++d) total += h.function(d);
  return total;
}

GradedModulePresentation module_dual(const GradedModulePresentation& m) {
  GradedModulePresentation p = prune(m);
  const std::size_t nvars = p.nvars();
  GradedFreeModule f0_dual = dual_of(p.target);
  GradedFreeModule f1_dual = dual_of(p.relation_module());
  std::vector<FreeModuleElement> rows = transpose(p.relations, p.target.rank(), nvars);
  std::vector<FreeModuleElement> ker = kernel(f0_dual, f1_dual, rows);
  return presentation_of_submodule(f0_dual, ker);
}

GradedModulePresentation ext1_against_ring(const GradedModulePresentation& m) {
  ResolutionData r = free_resolution(m);
  const std::size_t nvars = m.nvars();
  if (r.maps.empty()) return {GradedFreeModule{nvars, {}}, {}};
  GradedFreeModule f0_dual = dual_of(r.terms[0]);
  GradedFreeModule f1_dual = dual_of(r.terms[1]);
  std::vector<FreeModuleElement> k_gens;
  if (r.maps.size() >= 2) {
    GradedFreeModule f2_dual = dual_of(r.terms[2]);
    std::vector<FreeModuleElement> rows = transpose(r.maps[1], r.terms[1].rank(), nvars);
    k_gens = kernel(f1_dual, f2_dual, rows);
  } else {
    for (std::size_t j = 0; j < f1_dual.rank(); ++j) k_gens.push_back(FreeModuleElement::unit(f1_dual, j));
  }
  std::vector<FreeModuleElement> b_gens = transpose(r.maps[0], r.terms[0].rank(), nvars);
  (void)f0_dual;
  return subquotient(f1_dual, k_gens, b_gens);
}

}  // namespace logchern
