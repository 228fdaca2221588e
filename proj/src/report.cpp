#include "logchern/report.hpp"

#include <sstream>

namespace logchern {

using json = nlohmann::json;

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational_vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> names_for(const ResolutionData& r) {
  return default_variable_names(r.terms.empty() ? 0 : r.terms.front().nvars);
}

}  // namespace

json class_json(const TruncatedPolyZ& c) {
  json out = json::array();
  for (const auto& x : c.coefficients()) out.push_back(integer_json(x));
  return out;
}

json poincare_json(const PoincarePoly& p) {
  json out = json::array();
  for (const auto& x : p.b) out.push_back(integer_json(x));
  return out;
}

json arrangement_json(const Arrangement& a) {
  json j;
  j["l"] = a.dim;
  j["n"] = a.size();
  j["hyperplanes"] = a.normals;
  if (a.affine) j["constants"] = a.constants;
  if (!a.labels.empty()) j["labels"] = a.labels;
  return j;
}

json lattice_json(const IntersectionLattice& lat) {
  json levels = json::array();
  for (int c = 0; c <= lat.rank(); ++c) {
    json flats = json::array();
    for (const auto& x : lat.flats(c)) flats.push_back({{"hyperplanes", x.hyperplanes}, {"mu", x.mu}});
    levels.push_back({{"codim", c}, {"count", lat.flats(c).size()}, {"flats", flats}});
  }
  return {{"affine", lat.affine()}, {"size", lat.size()}, {"levels", levels}};
}

json twist_multisets_json(const ResolutionData& r) {
  json out = json::array();
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    json m = json::object();
    for (auto [k, mult] : r.twist_multiset(i)) m[std::to_string(k)] = mult;
    out.push_back(m);
  }
  return out;
}

json resolution_json(const ResolutionData& r) {
  auto names = names_for(r);
  json maps = json::array();
  for (const auto& map : r.maps) {
    json cols = json::array();
    for (const auto& col : map) {
      json entries = json::array();
      for (const auto& p : col.components) entries.push_back(p.to_string(names));
      cols.push_back(entries);
    }
    maps.push_back(cols);
  }
  return {{"length", r.length()}, {"minimal", r.minimal}, {"terms", twist_multisets_json(r)}, {"maps", maps}};
}

json log_module_json(const LogModule& lm, const FreenessReport& fr, const ResolutionData& res) {
  json j;
  j["kind"] = to_string(lm.kind);
  j["generator_degrees"] = lm.generator_degrees();
  j["resolution"] = twist_multisets_json(res);
  j["pdim"] = fr.pdim;
  j["free"] = fr.is_free;
  if (fr.is_free) j["exponents"] = fr.exponents;
  if (fr.saito_ok) j["saito_determinant_ok"] = *fr.saito_ok;
  return j;
}

json nonfree_json(const NonFreeLocusReport& r) {
  json j;
  j["N"] = r.n_projective;
  j["cone_dim"] = r.cone_dim;
  j["ext1_hilbert_polynomial"] = r.ext1_hilbert_polynomial.to_string();
  if (r.per_flat_total) {
    json flats = json::array();
    for (const auto& f : r.per_flat)
      flats.push_back({{"hyperplanes", f.hyperplanes},
                       {"point", rational_vector_json(f.point)},
                       {"chart", rational_vector_json(f.chart)},
                       {"N", f.n}});
    j["per_flat"] = flats;
    j["per_flat_total"] = *r.per_flat_total;
  }
  return j;
}

json verification_json(const VerificationReport& r) {
  json j;
  j["l"] = r.l;
  j["pi_projective"] = poincare_json(r.pi_projective);
  j["lhs"] = class_json(r.lhs);
  j["lhs_via_dual"] = class_json(r.lhs_via_dual);
  j["lhs_via_twist"] = r.lhs_via_twist ? class_json(*r.lhs_via_twist) : json(nullptr);
  j["csm"] = class_json(r.csm);
  j["chern_omega_1"] = class_json(r.chern_omega_1);
  j["N"] = r.n ? json(*r.n) : json(nullptr);
  j["N_per_flat"] = r.n_per_flat ? json(*r.n_per_flat) : json(nullptr);
  j["defect_coeff"] = integer_json(r.defect_coeff);
  j["predicted_defect"] = r.predicted_defect ? class_json(*r.predicted_defect) : json(nullptr);
  j["residual"] = r.residual ? class_json(*r.residual) : json(nullptr);
  j["mustata_schenck_residual"] =
      r.mustata_schenck_residual ? class_json(*r.mustata_schenck_residual) : json(nullptr);
  j["denham_schulze_residual"] =
      r.denham_schulze_residual ? class_json(*r.denham_schulze_residual) : json(nullptr);
  j["pdim_omega10"] = r.pdim_omega10;
  const auto& h = r.hypotheses;
  j["hypotheses"] = {{"central", h.central},
                     {"free", h.free},
                     {"locally_free", h.locally_free},
                     {"zero_dim_nonfree_locus", h.zero_dim_nonfree_locus},
                     {"local_tameness", h.local_tameness},
                     {"ext1_cone_dim", h.ext1_cone_dim},
                     {"satisfied", h.satisfied()}};
  j["holds"] = r.holds();
  return j;
}

std::string twist_multiset_text(const std::map<int, int>& m) {
  std::string out = "{";
  bool first = true;
  // Descending twist, i.e. ascending generator degree.
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(it->first) + ": " + std::to_string(it->second);
  }
  return out + "}";
}

std::string resolution_text(const ResolutionData& r, bool with_matrices) {
  std::ostringstream os;
  auto names = names_for(r);
  for (std::size_t i = 0; i < r.terms.size(); ++i) os << "F" << i << " = " << twist_multiset_text(r.twist_multiset(i)) << "\n";
  if (!with_matrices) return os.str();
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    os << "d" << i + 1 << ": F" << i + 1 << " -> F" << i << "\n";
    for (const auto& col : r.maps[i]) {
      os << "  [";
      for (std::size_t k = 0; k < col.components.size(); ++k) {
        if (k) os << ", ";
        os << col.components[k].to_string(names);
      }
      os << "]\n";
    }
  }
  return os.str();
}

}  // namespace logchern
