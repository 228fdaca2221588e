#include "logchern/log_geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "logchern/errors.hpp"
#include "logchern/parallel.hpp"

namespace logchern {

namespace {

LogModule finish(LogModuleKind kind, const GradedFreeModule& ambient,
                 const std::vector<FreeModuleElement>& gens) {
  LogModule lm;
  lm.kind = kind;
  lm.ambient = ambient;
  lm.generators = minimal_generators(ambient, gens);
  lm.presentation = presentation_of_submodule(ambient, lm.generators);
  return lm;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m, std::size_t nvars) {
  std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(nvars, 1);
  if (n == 1) return m[0][0];
  MultiPoly acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * determinant(std::move(minor), nvars);
    acc = j % 2 ? acc - term : acc + term;
  }
  return acc;
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return false;
  Rational k = q.leading_term().second / p.leading_term().second;
  return p.scaled(k) == q;
}

}  // namespace

std::string to_string(LogModuleKind k) {
  switch (k) {
    case LogModuleKind::kD: return "D";
    case LogModuleKind::kD0: return "D0";
    case LogModuleKind::kOmega1: return "Omega1";
    case LogModuleKind::kOmega10: return "Omega1_0";
  }
  return "?";
}

DefiningData defining_data(const Arrangement& a) {
  if (a.affine) throw InputError("defining polynomial needs a central arrangement");
  DefiningData dd;
  dd.nvars = a.dim;
  dd.f = MultiPoly::constant(a.dim, 1);
  for (const auto& n : a.normals) dd.f *= MultiPoly::linear_form(n);
  dd.d = static_cast<int>(a.size());
  MultiPoly euler(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    dd.partials.push_back(dd.f.derivative(i));
    euler += MultiPoly::variable(a.dim, i) * dd.partials.back();
  }
  if (euler != dd.f.scaled(dd.d)) throw std::logic_error("Euler identity failed");
  return dd;
}

LogModule derivation_module_d0(const DefiningData& dd) {
  std::size_t l = dd.nvars;
  GradedFreeModule ambient = GradedFreeModule::free(l, l, -1);
  GradedFreeModule target = GradedFreeModule::free(l, 1, -dd.d);
  std::vector<FreeModuleElement> cols;
  for (const auto& p : dd.partials) cols.push_back(FreeModuleElement::from_poly(p));
  auto k = kernel(ambient, target, cols);
  return finish(LogModuleKind::kD0, ambient, k);
}

LogModule derivation_module(const DefiningData& dd) {
  LogModule d0 = derivation_module_d0(dd);
  std::vector<FreeModuleElement> gens;
  FreeModuleElement chi;
  for (std::size_t i = 0; i < dd.nvars; ++i) chi.components.push_back(MultiPoly::variable(dd.nvars, i));
  gens.push_back(chi);
  gens.insert(gens.end(), d0.generators.begin(), d0.generators.end());
  return finish(LogModuleKind::kD, d0.ambient, gens);
}

LogModule log_forms(const DefiningData& dd) {
  std::size_t l = dd.nvars;
  GradedFreeModule ambient = GradedFreeModule::free(l, l, 1 - dd.d);
  if (l == 1) {
    return finish(LogModuleKind::kOmega1, ambient, {FreeModuleElement::unit(ambient, 0)});
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p = 0; p < l; ++p)
    for (std::size_t q = p + 1; q < l; ++q) pairs.emplace_back(p, q);
  GradedFreeModule target = GradedFreeModule::free(l, pairs.size(), 2 - 2 * dd.d);
  GradedFreeModule source = ambient;
  source.twists.insert(source.twists.end(), pairs.size(), 2 - dd.d);

  std::vector<FreeModuleElement> cols;
  for (std::size_t i = 0; i < l; ++i) {
    FreeModuleElement c = FreeModuleElement::zero(target);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [p, q] = pairs[k];
      if (i == q) c.components[k] = dd.partials[p];
      if (i == p) c.components[k] = -dd.partials[q];
    }
    cols.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    FreeModuleElement c = FreeModuleElement::zero(target);
    c.components[k] = dd.f;
    cols.push_back(std::move(c));
  }
  auto ker = kernel(source, target, cols);
  std::vector<FreeModuleElement> gens;
  for (const auto& v : ker) {
    FreeModuleElement g{std::vector<MultiPoly>(v.components.begin(), v.components.begin() + static_cast<long>(l))};
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return finish(LogModuleKind::kOmega1, ambient, gens);
}

LogModule relative_log_forms(const DefiningData& dd, const LogModule& omega1) {
  std::size_t l = dd.nvars;
  GradedFreeModule source{l, omega1.generator_degrees()};
  GradedFreeModule target = GradedFreeModule::free(l, 1, -dd.d);
  std::vector<FreeModuleElement> cols;
  for (const auto& g : omega1.generators) {
    MultiPoly c(l);
    for (std::size_t i = 0; i < l; ++i) c += MultiPoly::variable(l, i) * g.components[i];
    cols.push_back(FreeModuleElement::from_poly(c));
  }
  std::vector<FreeModuleElement> gens;
  if (!cols.empty()) {
    for (const auto& v : kernel(source, target, cols))
      gens.push_back(linear_combination(omega1.ambient, omega1.generators, v.components));
  }
  return finish(LogModuleKind::kOmega10, omega1.ambient, gens);
}

MultiPoly saito_determinant(const std::vector<FreeModuleElement>& derivations) {
  if (derivations.empty()) throw std::invalid_argument("no derivations");
  std::size_t nvars = derivations.front().components.front().nvars();
  std::vector<std::vector<MultiPoly>> m;
  for (const auto& v : derivations) m.push_back(v.components);
  return determinant(std::move(m), nvars);
}

FreenessReport freeness_test(const LogModule& lm, const DefiningData* dd) {
  FreenessReport r;
  auto res = free_resolution(lm.presentation);
  r.pdim = static_cast<int>(res.length());
  r.is_free = r.pdim == 0;
  if (!r.is_free) return r;
  bool derivations = lm.kind == LogModuleKind::kD || lm.kind == LogModuleKind::kD0;
  for (int deg : lm.generator_degrees()) r.exponents.push_back(derivations ? deg + 1 : 1 - deg);
  std::sort(r.exponents.begin(), r.exponents.end());
  if (derivations && dd) {
    std::vector<FreeModuleElement> basis;
    if (lm.kind == LogModuleKind::kD0) {
      FreeModuleElement chi;
      for (std::size_t i = 0; i < dd->nvars; ++i) chi.components.push_back(MultiPoly::variable(dd->nvars, i));
      basis.push_back(chi);
    }
    basis.insert(basis.end(), lm.generators.begin(), lm.generators.end());
    if (basis.size() == dd->nvars) r.saito_ok = proportional(dd->f, saito_determinant(basis));
  }
  return r;
}

FreenessReport freeness_test(const LogModule& lm) { return freeness_test(lm, nullptr); }

Arrangement chart_arrangement(const Arrangement& a, const Flat& x, const std::vector<Rational>& chart) {
  std::size_t l = a.dim;
  auto basis = nullspace(RationalMatrix{chart}, l);
  std::vector<std::vector<long>> normals;
  for (auto i : x.hyperplanes) {
    std::vector<Rational> row;
    for (const auto& b : basis) {
      Rational s = 0;
      for (std::size_t k = 0; k < l; ++k) s += a.normals[i][k] * b[k];
      row.push_back(s);
    }
    normals.push_back(primitive_integer_vector(row));
  }
  return make_central(l - 1, std::move(normals));
}

long local_defect(const Arrangement& a, const Flat& x, const std::vector<Rational>& chart, int degree_cap) {
  Arrangement local = chart_arrangement(a, x, chart);
  auto dd = defining_data(local);
  auto om = log_forms(dd);
  return finite_length(ext1_against_ring(om.presentation), degree_cap);
}

NonFreeLocusReport nonfree_locus(const Arrangement& a, const LogModule& omega10, const NonFreeOptions& opts) {
  NonFreeLocusReport r;
  r.ext1 = ext1_against_ring(omega10.presentation);
  r.cone_dim = krull_dim(r.ext1);
  if (r.cone_dim > 1)
    throw HypothesisError("non-free locus not zero-dimensional; N undefined (Ext^1 support of dimension " +
                          std::to_string(r.cone_dim - 1) + ")");
  r.ext1_hilbert_polynomial = hilbert_polynomial(r.ext1);
  if (r.ext1_hilbert_polynomial.degree() > 0) throw std::logic_error("Ext^1 Hilbert polynomial is not constant");
  Rational c = r.ext1_hilbert_polynomial(0);
  if (c.get_den() != 1 || c < 0) throw std::logic_error("Ext^1 Hilbert polynomial is not a natural number");
  r.n_projective = static_cast<long>(to_int64(c.get_num()));

  if (!opts.per_flat || a.dim < 2) return r;
  auto lat = build_lattice(a);
  int codim = static_cast<int>(a.dim) - 1;
  if (lat.rank() < codim) return r;
  const auto& flats = lat.flats(codim);
  r.per_flat.resize(flats.size());
  for (std::size_t i = 0; i < flats.size(); ++i) {
    auto& fc = r.per_flat[i];
    fc.hyperplanes = flats[i].hyperplanes;
    fc.point = flats[i].subspace.front();
    std::vector<Rational> chart(a.dim, Rational(0));
    std::size_t k = a.dim;
    if (opts.chart && *opts.chart < a.dim && fc.point[*opts.chart] != 0) k = *opts.chart;
    if (!opts.chart)
      for (std::size_t j = 0; j < a.dim && k == a.dim; ++j)
        if (fc.point[j] != 0) k = j;
    if (k < a.dim) {
      chart[k] = 1;
    } else {
      chart = fc.point;
    }
    fc.chart = chart;
  }
  parallel_for(flats.size(), [&](std::size_t i) {
    r.per_flat[i].n = local_defect(a, flats[i], r.per_flat[i].chart, opts.degree_cap);
  });
  long total = 0;
  for (const auto& fc : r.per_flat) total += fc.n;
  r.per_flat_total = total;
  return r;
}

LogModuleBundle compute_log_modules(const Arrangement& a) {
  LogModuleBundle b;
  b.dd = defining_data(a);
  b.d0 = derivation_module_d0(b.dd);
  b.omega1 = log_forms(b.dd);
  b.omega10 = relative_log_forms(b.dd, b.omega1);
  return b;
}

}  // namespace logchern
