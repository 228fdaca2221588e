#include "logchern/arrangements.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "logchern/errors.hpp"
#include "logchern/monomial.hpp"

namespace logchern {

namespace {

using json = nlohmann::json;

std::vector<long> normalize_row(const std::vector<long>& v) {
  bool nonzero = std::any_of(v.begin(), v.end(), [](long x) { return x != 0; });
  if (!nonzero) throw InputError("zero normal vector");
  return primitive_integer_vector(v);
}

Arrangement finish(std::size_t dim, std::vector<std::vector<long>> rows, bool affine,
                   std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != rows.size())
    throw InputError("label count does not match hyperplane count");
  Arrangement a;
  a.dim = dim;
  a.affine = affine;
  a.labels = std::move(labels);
  std::set<std::vector<long>> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& r = rows[i];
    if (r.size() != dim + (affine ? 1 : 0))
      throw InputError("hyperplane " + std::to_string(i) + " has the wrong length");
    std::vector<long> normal(r.begin(), r.begin() + static_cast<long>(dim));
    if (std::all_of(normal.begin(), normal.end(), [](long x) { return x == 0; }))
      throw InputError("hyperplane " + std::to_string(i) + " has a zero normal");
    // Sign is fixed by the normal part; the scale by the whole row.
    auto p = normalize_row(r);
    auto first = std::find_if(p.begin(), p.end() - (affine ? 1 : 0), [](long x) { return x != 0; });
    if (*first < 0)
      for (auto& x : p) x = -x;
    if (!seen.insert(p).second) throw InputError("repeated hyperplane " + std::to_string(i));
    if (affine) {
      a.constants.push_back(p.back());
      p.pop_back();
    }
    a.normals.push_back(std::move(p));
  }
  return a;
}

RationalMatrix rows_for(const Arrangement& a, const std::vector<std::size_t>& idx, bool augmented) {
  RationalMatrix m;
  for (auto i : idx) {
    std::vector<Rational> row(a.normals[i].begin(), a.normals[i].end());
    if (augmented) row.emplace_back(a.constants[i]);
    m.push_back(std::move(row));
  }
  return m;
}

Flat make_flat(const Arrangement& a, std::vector<std::size_t> idx) {
  Flat x;
  x.hyperplanes = std::move(idx);
  bool aug = a.affine;
  auto e = rref(rows_for(a, x.hyperplanes, aug), a.dim + (aug ? 1 : 0));
  x.equations = std::move(e.rows);
  x.codim = static_cast<int>(e.rank());
  if (!a.affine) x.subspace = nullspace(x.equations, a.dim);
  return x;
}

std::string term_string(long c, const std::string& name, bool first) {
  std::string out;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  long m = c < 0 ? -c : c;
  if (m != 1) out += std::to_string(m) + "*";
  return out + name;
}

}  // namespace

Arrangement make_central(std::size_t dim, std::vector<std::vector<long>> normals,
                         std::vector<std::string> labels) {
  if (dim < 1) throw InputError("dimension must be at least 1");
  return finish(dim, std::move(normals), false, std::move(labels));
}

Arrangement make_affine(std::size_t dim, std::vector<std::vector<long>> normals,
                        std::vector<long> constants, std::vector<std::string> labels) {
  if (normals.size() != constants.size()) throw InputError("constant count does not match");
  for (std::size_t i = 0; i < normals.size(); ++i) normals[i].push_back(constants[i]);
  return finish(dim, std::move(normals), true, std::move(labels));
}

Arrangement parse_arrangement(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("l") || !j.contains("hyperplanes"))
      throw InputError("expected an object with \"l\" and \"hyperplanes\"");
    long l = j.at("l").get<long>();
    if (l < 1 || l > static_cast<long>(kMaxVars)) throw InputError("\"l\" out of range");
    auto rows = j.at("hyperplanes").get<std::vector<std::vector<long>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& r : rows)
      if (r.size() != static_cast<std::size_t>(l)) throw InputError("hyperplane length differs from \"l\"");
    if (j.contains("constants")) {
      auto c = j.at("constants").get<std::vector<long>>();
      return make_affine(static_cast<std::size_t>(l), std::move(rows), std::move(c), std::move(labels));
    }
    return make_central(static_cast<std::size_t>(l), std::move(rows), std::move(labels));
  } catch (const json::exception& e) {
    throw InputError(std::string("bad arrangement field: ") + e.what());
  }
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

std::string arrangement_to_json(const Arrangement& a) {
  json j;
  j["l"] = a.dim;
  j["hyperplanes"] = a.normals;
  if (a.affine) j["constants"] = a.constants;
  if (!a.labels.empty()) j["labels"] = a.labels;
  return j.dump();
}

std::string hyperplane_to_string(const Arrangement& a, std::size_t i) {
  auto names = default_variable_names(a.dim);
  std::string out;
  for (std::size_t k = 0; k < a.dim; ++k)
    if (a.normals[i][k] != 0) out += term_string(a.normals[i][k], names[k], out.empty());
  if (a.affine) out += " = " + std::to_string(a.constants[i]);
  return out;
}

const std::vector<Flat>& IntersectionLattice::flats(int codim) const { return levels_.at(codim); }

std::size_t IntersectionLattice::size() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

const Flat* IntersectionLattice::find(const std::vector<std::size_t>& hyperplanes) const {
  for (const auto& level : levels_)
    for (const auto& x : level)
      if (x.hyperplanes == hyperplanes) return &x;
  return nullptr;
}

bool IntersectionLattice::below(const Flat& y, const Flat& x) {
  return std::includes(x.hyperplanes.begin(), x.hyperplanes.end(), y.hyperplanes.begin(),
                       y.hyperplanes.end());
}

std::optional<std::vector<std::size_t>> closure(const Arrangement& a,
                                                const std::vector<std::size_t>& hyperplanes) {
  bool aug = a.affine;
  std::size_t cols = a.dim + (aug ? 1 : 0);
  auto base = rref(rows_for(a, hyperplanes, aug), cols);
  if (aug && !base.pivots.empty() && base.pivots.back() == a.dim) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    RationalMatrix m = base.rows;
    m.push_back(rows_for(a, {j}, aug).front());
    if (matrix_rank(m, cols) == base.rank()) out.push_back(j);
  }
  return out;
}

IntersectionLattice build_lattice(const Arrangement& a) {
  std::vector<std::vector<Flat>> levels;
  levels.push_back({make_flat(a, {})});
  while (true) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& x : levels.back()) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::binary_search(x.hyperplanes.begin(), x.hyperplanes.end(), j)) continue;
        auto idx = x.hyperplanes;
        idx.insert(std::upper_bound(idx.begin(), idx.end(), j), j);
        auto c = closure(a, idx);
        if (c) next.insert(std::move(*c));
      }
    }
    if (next.empty()) break;
    std::vector<Flat> level;
    for (const auto& idx : next) level.push_back(make_flat(a, idx));
    levels.push_back(std::move(level));
  }
  return IntersectionLattice(a.dim, a.affine, std::move(levels));
}

IntersectionLattice mobius(IntersectionLattice lat) {
  for (int c = 0; c <= lat.rank(); ++c) {
    for (auto& x : lat.mutable_flats(c)) {
      if (c == 0) {
        x.mu = 1;
        continue;
      }
      long sum = 0;
      for (int k = 0; k < c; ++k)
        for (const auto& y : lat.flats(k))
          if (IntersectionLattice::below(y, x)) sum += y.mu;
      x.mu = -sum;
    }
  }
  return lat;
}

Integer PoincarePoly::operator()(long t) const {
  Integer acc = 0;
  for (auto it = b.rbegin(); it != b.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string PoincarePoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    Integer mag = abs(b[i]);
    if (out.empty()) {
      if (b[i] < 0) out += "-";
    } else {
      out += b[i] < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string PoincarePoly::factored_string() const {
  std::size_t k = b.size() - 1;
  for (std::size_t i = 0; i <= k; ++i)
    if (b[i] != binomial(static_cast<long>(k), static_cast<long>(i))) return to_string();
  if (k == 0) return "1";
  if (k == 1) return "(1+t)";
  return "(1+t)^" + std::to_string(k);
}

PoincarePoly poincare_affine(const IntersectionLattice& lat) {
  PoincarePoly p;
  p.b.assign(static_cast<std::size_t>(lat.rank()) + 1, Integer(0));
  for (int c = 0; c <= lat.rank(); ++c)
    for (const auto& x : lat.flats(c)) p.b[c] += (c % 2 ? -1 : 1) * x.mu;
  while (p.b.size() > 1 && p.b.back() == 0) p.b.pop_back();
  return p;
}

PoincarePoly poincare_affine(const Arrangement& a) { return poincare_affine(mobius(build_lattice(a))); }

PoincarePoly poincare_projective(const PoincarePoly& pi) {
  // Synthetic division by (1 + t), from the top coefficient down.
  std::size_t n = pi.b.size();
  if (n < 2) throw std::domain_error("Poincare polynomial is not divisible by 1+t");
  PoincarePoly q;
  q.b.assign(n - 1, Integer(0));
  Integer carry = 0;
  for (std::size_t i = n - 1; i >= 1; --i) {
    q.b[i - 1] = pi.b[i] - carry;
    carry = q.b[i - 1];
  }
  if (pi.b[0] != carry) throw std::domain_error("Poincare polynomial is not divisible by 1+t");
  return q;
}

PoincarePoly poincare_projective(const Arrangement& a) {
  if (a.affine) throw InputError("projective Poincare polynomial needs a central arrangement");
  if (a.size() == 0) throw InputError("projective Poincare polynomial needs at least one hyperplane");
  return poincare_projective(poincare_affine(a));
}

Arrangement decone(const Arrangement& a, std::size_t h) {
  if (a.affine) throw InputError("decone needs a central arrangement");
  if (h >= a.size()) throw InputError("deconing index out of range");
  const auto& alpha = a.normals[h];
  std::size_t k = 0;
  while (alpha[k] == 0) ++k;
  std::vector<std::vector<long>> normals;
  std::vector<long> constants;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == h) continue;
    const auto& beta = a.normals[j];
    std::vector<long> row;
    for (std::size_t i = 0; i < a.dim; ++i)
      if (i != k) row.push_back(alpha[k] * beta[i] - beta[k] * alpha[i]);
    normals.push_back(std::move(row));
    constants.push_back(-beta[k]);
    if (!a.labels.empty()) labels.push_back(a.labels[j]);
  }
  return make_affine(a.dim - 1, std::move(normals), std::move(constants), std::move(labels));
}

Arrangement localize(const Arrangement& a, const Flat& x) {
  auto c = closure(a, x.hyperplanes);
  if (!c || *c != x.hyperplanes) throw InputError("not a flat of this arrangement");
  std::vector<std::vector<long>> normals;
  std::vector<std::string> labels;
  for (auto i : x.hyperplanes) {
    normals.push_back(a.normals[i]);
    if (!a.labels.empty()) labels.push_back(a.labels[i]);
  }
  Arrangement out;
  out.dim = a.dim;
  out.normals = std::move(normals);
  out.labels = std::move(labels);
  return out;
}

int arrangement_rank(const Arrangement& a) {
  std::vector<std::size_t> all(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) all[i] = i;
  return static_cast<int>(matrix_rank(rows_for(a, all, false), a.dim));
}

Arrangement essentialize(const Arrangement& a) {
  if (a.affine) throw InputError("essentialize needs a central arrangement");
  std::vector<std::size_t> all(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) all[i] = i;
  auto e = rref(rows_for(a, all, false), a.dim);
  if (e.rank() == a.dim) return a;
  // The row space has the RREF rows as a basis; a normal's coordinates in
  // that basis are its entries at the pivot columns.
  std::vector<std::vector<long>> normals;
  for (const auto& n : a.normals) {
    std::vector<long> row;
    for (auto p : e.pivots) row.push_back(n[p]);
    normals.push_back(std::move(row));
  }
  return make_central(std::max<std::size_t>(e.rank(), 1), std::move(normals), a.labels);
}

}  // namespace logchern
