#include "logchern/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace logchern {

// ---------------------------------------------------------------------------
// FreeModuleElement

FreeModuleElement FreeModuleElement::zero(const GradedFreeModule& f) {
  return {std::vector<MultiPoly>(f.rank(), MultiPoly(f.nvars))};
}

FreeModuleElement FreeModuleElement::unit(const GradedFreeModule& f, std::size_t j) {
  FreeModuleElement e = zero(f);
  e.components.at(j) = MultiPoly::constant(f.nvars, 1);
  return e;
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const MultiPoly& p) { return p.is_zero(); });
}

std::optional<int> FreeModuleElement::degree(const GradedFreeModule& f) const {
  if (components.size() != f.rank()) throw std::invalid_argument("element rank mismatch");
  std::optional<int> deg;
  for (std::size_t j = 0; j < components.size(); ++j) {
    for (const auto& t : components[j].terms()) {
      int d = t.first.degree() + f.twists[j];
      if (deg && *deg != d) throw std::invalid_argument("element is not homogeneous");
      deg = d;
    }
  }
  return deg;
}

bool FreeModuleElement::is_homogeneous(const GradedFreeModule& f) const {
  try {
    (void)degree(f);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

FreeModuleElement FreeModuleElement::operator+(const FreeModuleElement& o) const {
  if (o.size() != size()) throw std::invalid_argument("element rank mismatch");
  FreeModuleElement r = *this;
  for (std::size_t j = 0; j < size(); ++j) r.components[j] += o.components[j];
  return r;
}

FreeModuleElement FreeModuleElement::operator-(const FreeModuleElement& o) const {
  if (o.size() != size()) throw std::invalid_argument("element rank mismatch");
  FreeModuleElement r = *this;
  for (std::size_t j = 0; j < size(); ++j) r.components[j] -= o.components[j];
  return r;
}

FreeModuleElement FreeModuleElement::times(const MultiPoly& p) const {
  FreeModuleElement r = *this;
  for (auto& c : r.components) c *= p;
  return r;
}

std::string FreeModuleElement::to_string(std::span<const std::string> names) const {
  std::string out = "[";
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (j) out += ", ";
    out += components[j].to_string(names);
  }
  return out + "]";
}

FreeModuleElement linear_combination(const GradedFreeModule& f,
                                     std::span<const FreeModuleElement> vectors,
                                     std::span<const MultiPoly> coeffs) {
  if (vectors.size() != coeffs.size()) throw std::invalid_argument("combination size mismatch");
  FreeModuleElement r = FreeModuleElement::zero(f);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    r = r + vectors[i].times(coeffs[i]);
  }
  return r;
}

EngineStats& engine_stats() {
  static EngineStats stats;
  return stats;
}

// ---------------------------------------------------------------------------
// Flat representation

ModVec to_modvec(const FreeModuleElement& v, const ModuleOrder& order) {
  ModVec out;
  for (std::uint32_t j = 0; j < v.components.size(); ++j)
    for (const auto& [m, c] : v.components[j].terms()) out.push_back({m, j, c});
  std::sort(out.begin(), out.end(), [&](const ModTerm& a, const ModTerm& b) {
    return order.compare(a.m, a.pos, b.m, b.pos) > 0;
  });
  return out;
}

FreeModuleElement from_modvec(const ModVec& v, const GradedFreeModule& f, const ModuleOrder& order) {
  std::vector<std::vector<MultiPoly::Term>> parts(f.rank());
  for (const auto& t : v) parts.at(t.pos).emplace_back(t.m, t.c);
  FreeModuleElement out;
  out.components.reserve(f.rank());
  for (auto& p : parts) out.components.push_back(MultiPoly::from_terms(f.nvars, std::move(p), order.monomial));
  if (order.monomial != MonomialOrderKind::kGrevlex) {
    for (auto& c : out.components) c = c.with_order(MonomialOrderKind::kGrevlex);
  }
  return out;
}

namespace {

// v[from..] - c * m * g[gfrom..], merged in order.
ModVec sub_scaled(const ModVec& v, std::size_t from, const Rational& c, const Monomial& m,
                  const ModVec& g, std::size_t gfrom, const ModuleOrder& ord) {
  ModVec out;
  out.reserve(v.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  while (i < v.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(v[i++]);
      continue;
    }
    Monomial gm = g[j].m * m;
    if (i == v.size()) {
      out.push_back({gm, g[j].pos, -c * g[j].c});
      ++j;
      continue;
    }
    auto cmp = ord.compare(v[i].m, v[i].pos, gm, g[j].pos);
    if (cmp > 0) {
      out.push_back(v[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].pos, -c * g[j].c});
      ++j;
    } else {
      Rational s = v[i].c - c * g[j].c;
      if (s != 0) out.push_back({std::move(gm), v[i].pos, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(ModVec& v) {
  if (v.empty() || v.front().c == 1) return;
  Rational inv = 1 / v.front().c;
  for (auto& t : v) t.c *= inv;
}

int term_degree(const ModTerm& t, const ModuleOrder& ord) { return t.m.degree() + ord.twists[t.pos]; }

int vec_degree(const ModVec& v, const ModuleOrder& ord) {
  int d = 0;
  for (const auto& t : v) d = std::max(d, term_degree(t, ord));
  return d;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t pos;
  int degree;
};

class Buchberger {
 public:
  Buchberger(const GradedFreeModule& f, const ModuleOrder& ord)
      : f_(f), ord_(ord), by_pos_(f.rank()), ideal_(f.rank() == 1) {}

  // Runs the algorithm; if `accepted` is given it receives the indices of the
  // inputs that were not already in the span of earlier data.
  void run(const std::vector<ModVec>& inputs, std::vector<std::size_t>* accepted) {
    std::vector<std::size_t> order(inputs.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> in_deg(inputs.size());
    for (std::size_t k = 0; k < inputs.size(); ++k) in_deg[k] = vec_degree(inputs[k], ord_);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return in_deg[a] < in_deg[b]; });
    std::size_t next_input = 0;
    while (true) {
      while (next_input < order.size() && inputs[order[next_input]].empty()) ++next_input;
      bool have_input = next_input < order.size();
      if (pairs_.empty() && !have_input) break;
      int d_pair = pairs_.empty() ? INT32_MAX : min_pair_degree();
      int d_in = have_input ? in_deg[order[next_input]] : INT32_MAX;
      if (d_pair <= d_in) {
        process_pairs_of_degree(d_pair);
      } else {
        std::size_t k = order[next_input++];
        ModVec r = reduce(inputs[k], true);
        if (!r.empty()) {
          if (accepted) accepted->push_back(k);
          insert(std::move(r));
        }
      }
    }
  }

  std::vector<ModVec> reduced_basis() {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) keep.push_back(k);
    // Drop elements whose leading term is divisible by another kept one.
    std::vector<std::size_t> minimal;
    for (std::size_t a : keep) {
      bool redundant = false;
      for (std::size_t b : keep) {
        if (a == b) continue;
        const auto& ta = basis_[a].front();
        const auto& tb = basis_[b].front();
        if (ta.pos != tb.pos || !tb.m.divides(ta.m)) continue;
        if (!(ta.m == tb.m) || b < a) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    for (auto& v : by_pos_) v.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k) active_[k] = false;
    for (std::size_t a : minimal) {
      active_[a] = true;
      by_pos_[basis_[a].front().pos].push_back(a);
    }
    std::vector<ModVec> out;
    for (std::size_t a : minimal) {
      ModVec head{basis_[a].front()};
      ModVec tail(basis_[a].begin() + 1, basis_[a].end());
      ModVec red = reduce(std::move(tail), true);
      head.insert(head.end(), red.begin(), red.end());
      out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(), [&](const ModVec& a, const ModVec& b) {
      return ord_.compare(a.front().m, a.front().pos, b.front().m, b.front().pos) < 0;
    });
    return out;
  }

  // Full (tail) reduction against the active basis.
  ModVec reduce(ModVec v, bool full) const {
    ModVec result;
    std::size_t idx = 0;
    while (idx < v.size()) {
      const ModTerm& t = v[idx];
      const ModVec* red = find_reducer(t);
      if (red == nullptr) {
        if (!full) {
          result.insert(result.end(), v.begin() + static_cast<long>(idx), v.end());
          return result;
        }
        result.push_back(t);
        ++idx;
        continue;
      }
      Monomial q = red->front().m.quotient_of(t.m);
      Rational c = t.c;
      v = sub_scaled(v, idx + 1, c, q, *red, 1, ord_);
      idx = 0;
    }
    return result;
  }

 private:
  const ModVec* find_reducer(const ModTerm& t) const {
    for (std::size_t k : by_pos_[t.pos]) {
      if (basis_[k].front().m.divides(t.m)) return &basis_[k];
    }
    return nullptr;
  }

  int min_pair_degree() const {
    int d = INT32_MAX;
    for (const auto& p : pairs_) d = std::min(d, p.degree);
    return d;
  }

  void process_pairs_of_degree(int d) {
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (auto& p : pairs_) (p.degree == d ? batch : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      return ord_.compare(a.lcm, a.pos, b.lcm, b.pos) < 0;
    });
    auto& stats = engine_stats();
    int seen = stats.max_degree.load();
    while (d > seen && !stats.max_degree.compare_exchange_weak(seen, d)) {
    }
    for (const auto& p : batch) {
      const ModVec& a = basis_[p.i];
      const ModVec& b = basis_[p.j];
      Monomial qa = a.front().m.quotient_of(p.lcm);
      Monomial qb = b.front().m.quotient_of(p.lcm);
      // qa * a - qb * b, dropping the cancelled leading terms.
      ModVec qa_a;
      qa_a.reserve(a.size() - 1);
      for (std::size_t k = 1; k < a.size(); ++k) qa_a.push_back({a[k].m * qa, a[k].pos, a[k].c});
      ModVec s = sub_scaled(qa_a, 0, Rational(1), qb, b, 1, ord_);
      ++stats.spairs_reduced;
      ModVec r = reduce(std::move(s), true);
      if (r.empty()) {
        ++stats.zero_reductions;
      } else {
        insert(std::move(r));
      }
    }
  }

  // Gebauer-Moeller update followed by insertion.
  void insert(ModVec h) {
    make_monic(h);
    const std::size_t hk = basis_.size();
    const ModTerm& th = h.front();
    const std::uint32_t pos = th.pos;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g : by_pos_[pos]) {
      const Monomial& tg = basis_[g].front().m;
      c.push_back({g, tg.lcm(th.m), ideal_ && tg.coprime(th.m)});
    }
    std::vector<bool> in_c(c.size(), true), in_d(c.size(), false);
    for (std::size_t a = 0; a < c.size(); ++a) {
      in_c[a] = false;
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < c.size(); ++b) {
          if (b == a || !(in_c[b] || in_d[b])) continue;
          if (c[b].lcm.divides(c[a].lcm)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) in_d[a] = true;
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (!in_d[a] || c[a].coprime) continue;
      fresh.push_back({c[a].g, hk, c[a].lcm, pos, c[a].lcm.degree() + ord_.twists[pos]});
    }
    // Chain criterion on the existing pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.pos == pos && th.m.divides(p.lcm)) {
        const Monomial& ti = basis_[p.i].front().m;
        const Monomial& tj = basis_[p.j].front().m;
        if (!(ti.lcm(th.m) == p.lcm) && !(tj.lcm(th.m) == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    // Elements whose leading term h divides stay as pair partners but stop
    // being used as reducers or for new pairs.
    auto& list = by_pos_[pos];
    std::vector<std::size_t> still;
    for (std::size_t g : list) {
      if (th.m.divides(basis_[g].front().m)) {
        active_[g] = false;
      } else {
        still.push_back(g);
      }
    }
    list = std::move(still);
    basis_.push_back(std::move(h));
    active_.push_back(true);
    list.push_back(hk);
  }

  const GradedFreeModule& f_;
  const ModuleOrder& ord_;
  std::vector<ModVec> basis_;
  std::vector<bool> active_;
  std::vector<std::vector<std::size_t>> by_pos_;
  std::vector<Pair> pairs_;
  bool ideal_;
};

void check_order(const GradedFreeModule& f, const ModuleOrder& order) {
  if (order.twists.size() != f.rank()) throw std::invalid_argument("order twists do not match module rank");
  if (!order.blocks.empty() && order.blocks.size() != f.rank())
    throw std::invalid_argument("order blocks do not match module rank");
}

std::vector<ModVec> to_inputs(const GradedFreeModule& f, std::span<const FreeModuleElement> gens,
                              const ModuleOrder& order) {
  std::vector<ModVec> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.size() != f.rank()) throw std::invalid_argument("generator rank mismatch");
    for (const auto& c : g.components)
      if (c.nvars() != f.nvars) throw std::invalid_argument("generator arity mismatch");
    inputs.push_back(to_modvec(g, order));
  }
  return inputs;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(GradedFreeModule module, ModuleOrder order, std::vector<ModVec> elements)
    : module_(std::move(module)), order_(std::move(order)), elements_(std::move(elements)) {}

std::vector<FreeModuleElement> GroebnerBasis::elements() const {
  std::vector<FreeModuleElement> out;
  out.reserve(elements_.size());
  for (const auto& v : elements_) out.push_back(from_modvec(v, module_, order_));
  return out;
}

FreeModuleElement GroebnerBasis::element(std::size_t i) const {
  return from_modvec(elements_.at(i), module_, order_);
}

std::vector<Monomial> GroebnerBasis::leading_monomials(std::size_t position) const {
  std::vector<Monomial> out;
  for (const auto& v : elements_)
    if (v.front().pos == position) out.push_back(v.front().m);
  return out;
}

GroebnerBasis groebner_basis(const GradedFreeModule& f, std::span<const FreeModuleElement> gens,
                             const ModuleOrder& order) {
  check_order(f, order);
  std::vector<ModVec> inputs = to_inputs(f, gens, order);
  Buchberger engine(f, order);
  engine.run(inputs, nullptr);
  return GroebnerBasis(f, order, engine.reduced_basis());
}

GroebnerBasis groebner_basis(const GradedFreeModule& f, std::span<const FreeModuleElement> gens) {
  return groebner_basis(f, gens, ModuleOrder::for_module(f));
}

GroebnerBasis groebner_basis(std::span<const MultiPoly> gens, MonomialOrderKind kind) {
  std::size_t nvars = gens.empty() ? 0 : gens.front().nvars();
  GradedFreeModule f = GradedFreeModule::free(nvars, 1);
  std::vector<FreeModuleElement> vecs;
  for (const auto& g : gens) vecs.push_back(FreeModuleElement::from_poly(g));
  return groebner_basis(f, vecs, ModuleOrder::for_module(f, PositionPolicy::kTermOverPosition, kind));
}

FreeModuleElement normal_form(const FreeModuleElement& v, const GroebnerBasis& gb) {
  const auto& order = gb.order();
  ModVec x = to_modvec(v, order);
  ModVec result;
  std::size_t idx = 0;
  while (idx < x.size()) {
    const ModTerm& t = x[idx];
    const ModVec* red = nullptr;
    for (const auto& g : gb.raw()) {
      if (g.front().pos == t.pos && g.front().m.divides(t.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      result.push_back(t);
      ++idx;
      continue;
    }
    Monomial q = red->front().m.quotient_of(t.m);
    Rational c = t.c;
    x = sub_scaled(x, idx + 1, c, q, *red, 1, order);
    idx = 0;
  }
  return from_modvec(result, gb.module(), order);
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
  return normal_form(FreeModuleElement::from_poly(p), gb).components.front();
}

std::vector<FreeModuleElement> kernel(const GradedFreeModule& source, const GradedFreeModule& target,
                                      std::span<const FreeModuleElement> columns) {
  if (columns.size() != source.rank()) throw std::invalid_argument("kernel: column count mismatch");
  if (source.nvars != target.nvars) throw std::invalid_argument("kernel: arity mismatch");
  const std::size_t m = target.rank();
  const std::size_t r = source.rank();
  GradedFreeModule graph{target.nvars, target.twists};
  graph.twists.insert(graph.twists.end(), source.twists.begin(), source.twists.end());
  ModuleOrder order = ModuleOrder::for_module(graph);
  order.blocks.assign(m + r, 0);
  std::fill(order.blocks.begin(), order.blocks.begin() + static_cast<long>(m), 1);

  std::vector<FreeModuleElement> gens;
  gens.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& col = columns[i];
    if (col.size() != m) throw std::invalid_argument("kernel: column rank mismatch");
    auto d = col.degree(target);
    if (d && *d != source.twists[i]) throw std::invalid_argument("kernel: column degree mismatch");
    FreeModuleElement g = FreeModuleElement::zero(graph);
    for (std::size_t j = 0; j < m; ++j) g.components[j] = col.components[j];
    g.components[m + i] = MultiPoly::constant(target.nvars, 1);
    gens.push_back(std::move(g));
  }
  GroebnerBasis gb = groebner_basis(graph, gens, order);
  std::vector<FreeModuleElement> out;
  for (const auto& v : gb.raw()) {
    if (v.front().pos < m) continue;
    FreeModuleElement full = from_modvec(v, graph, order);
    FreeModuleElement part;
    part.components.assign(full.components.begin() + static_cast<long>(m), full.components.end());
    out.push_back(std::move(part));
  }
  return out;
}

GradedFreeModule syzygy_source(const GroebnerBasis& gb) {
  GradedFreeModule src{gb.module().nvars, {}};
  for (const auto& v : gb.raw()) src.twists.push_back(vec_degree(v, gb.order()));
  return src;
}

std::vector<FreeModuleElement> syzygies(const GroebnerBasis& gb) {
  return kernel(syzygy_source(gb), gb.module(), gb.elements());
}

std::vector<std::size_t> minimal_generator_indices(const GradedFreeModule& f,
                                                   std::span<const FreeModuleElement> gens) {
  ModuleOrder order = ModuleOrder::for_module(f);
  std::vector<ModVec> inputs = to_inputs(f, gens, order);
  for (const auto& g : gens) {
    if (!g.is_homogeneous(f)) throw std::invalid_argument("minimal generators need homogeneous input");
  }
  Buchberger engine(f, order);
  std::vector<std::size_t> accepted;
  engine.run(inputs, &accepted);
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

}  // namespace logchern
