#include "logchern/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "json.hpp"
#include "logchern/bundled.hpp"
#include "logchern/errors.hpp"
#include "logchern/report.hpp"

namespace logchern {

namespace {

using json = nlohmann::json;

struct Output {
  json result = json::object();
  std::ostringstream text;
  std::vector<std::string> notes;
  int exit_code = kExitOk;
};

int cap_of(const JobConfig& cfg) { return cfg.degree_cap.value_or(200); }

std::string set_string(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string rational_vector_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

void require_projective(const Arrangement& a) {
  if (a.affine) throw InputError("this command needs a central arrangement");
  if (a.size() == 0) throw InputError("this command needs at least one hyperplane");
}

void cmd_lattice(const Arrangement& a, Output& o) {
  auto lat = mobius(build_lattice(a));
  o.result["lattice"] = lattice_json(lat);
  o.text << "flats: " << lat.size() << "\n";
  for (int c = 0; c <= lat.rank(); ++c) {
    o.text << "codim " << c << " (" << lat.flats(c).size() << "):\n";
    for (const auto& x : lat.flats(c)) o.text << "  " << set_string(x.hyperplanes) << "  mu = " << x.mu << "\n";
  }
}

void cmd_poincare(const Arrangement& a, const JobConfig& cfg, Output& o) {
  auto pi = poincare_affine(a);
  o.result["affine"] = poincare_json(pi);
  o.text << "pi(A,t)  = " << pi.factored_string();
  if (pi.factored_string() != pi.to_string()) o.text << " = " << pi.to_string();
  o.text << "\n";
  if (!a.affine && a.size() > 0) {
    auto pp = poincare_projective(pi);
    o.result["projective"] = poincare_json(pp);
    o.text << "pi(PA,t) = " << pp.factored_string();
    if (pp.factored_string() != pp.to_string()) o.text << " = " << pp.to_string();
    o.text << "\n";
    if (cfg.seed) {
      std::mt19937_64 rng(*cfg.seed);
      std::size_t h = std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng);
      auto dpi = poincare_affine(decone(a, h));
      PoincarePoly prod;
      prod.b.assign(dpi.b.size() + 1, Integer(0));
      for (std::size_t i = 0; i < dpi.b.size(); ++i) {
        prod.b[i] += dpi.b[i];
        prod.b[i + 1] += dpi.b[i];
      }
      bool ok = prod == pi;
      o.result["decone_check"] = {{"hyperplane", h}, {"deconed", poincare_json(dpi)}, {"ok", ok}};
      o.text << "decone at " << h << ": pi(dA,t) = " << dpi.to_string() << (ok ? " (consistent)" : " (MISMATCH)") << "\n";
      if (!ok) throw std::logic_error("deconing identity failed");
    }
  }
}

void cmd_csm(const Arrangement& a, Output& o) {
  require_projective(a);
  auto pp = poincare_projective(a);
  auto comp = csm_complement(pp, a.dim);
  auto div = csm_of_divisor(pp, a.dim);
  o.result["pi_projective"] = poincare_json(pp);
  o.result["csm_complement"] = class_json(comp);
  o.result["csm_divisor"] = class_json(div);
  o.result["euler_characteristic"] = pp(-1).get_si();
  o.text << "pi(PA,t)     = " << pp.to_string() << "\n";
  o.text << "c_SM(M(PA))  = " << comp.to_string("h") << "\n";
  o.text << "c_SM(PA)     = " << div.to_string("h") << "\n";
  o.text << "chi(M(PA))   = " << pp(-1).get_str() << "\n";
}

void cmd_modules(const Arrangement& a, const JobConfig& cfg, Output& o) {
  require_projective(a);
  auto mods = compute_log_modules(a);
  LogModule d = derivation_module(mods.dd);
  json arr = json::array();
  for (const LogModule* lm : {&d, &mods.d0, &mods.omega1, &mods.omega10}) {
    auto fr = freeness_test(*lm, &mods.dd);
    auto res = free_resolution(lm->presentation);
    arr.push_back(log_module_json(*lm, fr, res));
    o.text << to_string(lm->kind) << ": generator degrees [";
    auto degs = lm->generator_degrees();
    for (std::size_t i = 0; i < degs.size(); ++i) o.text << (i ? ", " : "") << degs[i];
    o.text << "], pdim " << fr.pdim;
    if (fr.is_free) {
      o.text << ", free, exponents (";
      for (std::size_t i = 0; i < fr.exponents.size(); ++i) o.text << (i ? ", " : "") << fr.exponents[i];
      o.text << ")";
      if (fr.saito_ok) o.text << (*fr.saito_ok ? ", Saito determinant ok" : ", Saito determinant FAILED");
    }
    o.text << "\n";
    for (std::size_t i = 0; i < res.terms.size(); ++i)
      o.text << "  F" << i << " = " << twist_multiset_text(res.twist_multiset(i)) << "\n";
  }
  o.result["modules"] = arr;
  NonFreeOptions nf;
  nf.degree_cap = cap_of(cfg);
  try {
    auto locus = nonfree_locus(a, mods.omega10, nf);
    o.result["N"] = locus.n_projective;
    o.result["cone_dim"] = locus.cone_dim;
    o.text << "N(PA) = " << locus.n_projective << ", Ext^1 cone dimension " << locus.cone_dim << "\n";
  } catch (const HypothesisError& e) {
    o.result["N"] = nullptr;
    o.result["cone_dim"] = krull_dim(ext1_against_ring(mods.omega10.presentation));
    o.notes.push_back(e.what());
    o.text << "N(PA) undefined: " << e.what() << "\n";
  }
}

void cmd_resolution(const Arrangement& a, const JobConfig& cfg, Output& o) {
  require_projective(a);
  std::string which = cfg.module.value_or("Omega1_0");
  auto mods = compute_log_modules(a);
  const LogModule* lm = nullptr;
  LogModule d;
  if (which == "D") {
    d = derivation_module(mods.dd);
    lm = &d;
  } else if (which == "D0") {
    lm = &mods.d0;
  } else if (which == "Omega1") {
    lm = &mods.omega1;
  } else if (which == "Omega1_0") {
    lm = &mods.omega10;
  } else {
    throw InputError("unknown module " + which + " (expected D, D0, Omega1 or Omega1_0)");
  }
  auto res = free_resolution(lm->presentation);
  json j = resolution_json(res);
  if (cfg.no_matrices) j.erase("maps");
  j["module"] = which;
  o.result["resolution"] = j;
  o.text << which << "\n" << resolution_text(res, !cfg.no_matrices);
}

void cmd_chern(const Arrangement& a, Output& o) {
  require_projective(a);
  if (a.dim < 2) throw InputError("chern needs l >= 2");
  std::size_t l = a.dim;
  auto mods = compute_log_modules(a);
  auto pp = poincare_projective(a);
  auto c_dual = chern_from_resolution(free_resolution(mods.d0.presentation), 0, l);
  auto c_om0 = chern_from_resolution(free_resolution(mods.omega10.presentation), 1, l);
  auto c_om = chern_from_resolution(free_resolution(mods.omega1.presentation), 1, l);
  auto ms = verify_mustata_schenck(c_om0, pp);
  bool split_ok = c_om == ChernPoly::linear(l, 1) * c_om0;
  o.result["chern_dual"] = class_json(c_dual);
  o.result["chern_omega_1"] = class_json(c_om0);
  o.result["chern_omega_affine_1"] = class_json(c_om);
  o.result["pi_projective"] = poincare_json(pp);
  o.result["mustata_schenck_residual"] = class_json(ms);
  o.result["splitting_consistent"] = split_ok;
  o.text << "c_t(Omega^1(PA)^v)      = " << c_dual.to_string("t") << "\n";
  o.text << "c_t(Omega^1(PA)(1))     = " << c_om0.to_string("t") << "\n";
  o.text << "pi(PA,t)                = " << pp.to_string() << "\n";
  o.text << "c_t(Omega^1(PA)(1)) - pi = " << ms.to_string("t") << "\n";
  o.text << "c_t(Omega^1(A)~(1)) = (1+t) c_t(Omega^1(PA)(1)): " << (split_ok ? "yes" : "NO") << "\n";
  if (!split_ok) throw std::logic_error("Euler splitting inconsistent with the Chern computation");
}

void cmd_nval(const Arrangement& a, const JobConfig& cfg, Output& o) {
  require_projective(a);
  auto mods = compute_log_modules(a);
  NonFreeOptions nf;
  nf.per_flat = true;
  nf.chart = cfg.chart;
  nf.degree_cap = cap_of(cfg);
  auto fr = freeness_test(mods.omega10);
  auto locus = nonfree_locus(a, mods.omega10, nf);
  o.result["nonfree_locus"] = nonfree_json(locus);
  o.result["pdim_omega10"] = fr.pdim;
  std::string note;
  if (fr.is_free) {
    note = "free";
  } else if (locus.n_projective == 0) {
    note = "locally free, not free";
  } else {
    note = "not locally free";
  }
  o.result["note"] = note;
  o.text << "N(PA) = " << locus.n_projective << " (" << note << ")\n";
  o.text << "Ext^1 cone dimension " << locus.cone_dim << ", Hilbert polynomial "
         << locus.ext1_hilbert_polynomial.to_string() << "\n";
  if (locus.per_flat_total) {
    o.text << "per-flat sum = " << *locus.per_flat_total << "\n";
    for (const auto& f : locus.per_flat)
      if (f.n)
        o.text << "  " << set_string(f.hyperplanes) << " at " << rational_vector_string(f.point) << ": " << f.n
               << "\n";
    if (*locus.per_flat_total != locus.n_projective)
      throw std::logic_error("per-flat N differs from the graded Ext^1 value");
  }
}

void cmd_verify(const Arrangement& a, const JobConfig& cfg, Output& o) {
  VerifyOptions vo;
  vo.assume_locally_tame = cfg.assume_locally_tame;
  vo.chart = cfg.chart;
  vo.degree_cap = cap_of(cfg);
  auto r = verify_main_theorem(a, vo);
  o.result["verification"] = verification_json(r);
  auto line = [&](const std::string& k, const std::string& v) {
    o.text << std::left << std::setw(28) << k << "= " << v << "\n";
  };
  line("pi(PA,t)", r.pi_projective.to_string());
  line("c(Omega^1(PA)^v)", r.lhs.to_string("h"));
  line("  via Hom(Omega1_0, S)", r.lhs_via_dual.to_string("h"));
  if (r.lhs_via_twist) line("  via dual and twist", r.lhs_via_twist->to_string("h"));
  line("c_SM(M(PA))", r.csm.to_string("h"));
  line("c_t(Omega^1(PA)(1))", r.chern_omega_1.to_string("t"));
  line("N(PA)", r.n ? std::to_string(*r.n) : "undefined");
  if (r.n_per_flat) line("  per-flat sum", std::to_string(*r.n_per_flat));
  line("defect coefficient", r.defect_coeff.get_str());
  if (r.predicted_defect) line("predicted defect", r.predicted_defect->to_string("h"));
  if (r.residual) line("residual", r.residual->to_string("h"));
  line("Mustata-Schenck residual", r.mustata_schenck_residual->to_string("t"));
  if (r.denham_schulze_residual) line("Denham-Schulze residual", r.denham_schulze_residual->to_string("t"));
  const auto& h = r.hypotheses;
  o.text << "hypotheses: free " << (h.free ? "yes" : "no") << ", locally free " << (h.locally_free ? "yes" : "no")
         << ", zero-dimensional non-free locus " << (h.zero_dim_nonfree_locus ? "yes" : "no")
         << ", local tameness " << h.local_tameness << "\n";
  if (!h.satisfied()) {
    o.exit_code = kExitHypothesis;
    if (!h.zero_dim_nonfree_locus)
      o.notes.push_back("non-free locus not zero-dimensional; the identity does not apply");
    else
      o.notes.push_back("local tameness unverified for l >= 5; pass --assume-locally-tame to assert it");
    o.text << "theorem: not applicable\n";
    return;
  }
  if (r.n && r.n_per_flat && *r.n != *r.n_per_flat)
    throw std::logic_error("per-flat N differs from the graded Ext^1 value");
  o.text << "theorem: " << (r.holds() ? "holds" : "FAILS") << "\n";
}

Arrangement load(const JobConfig& cfg) {
  if (!cfg.example.empty() && !cfg.input.empty()) throw InputError("give either an input file or --example");
  if (!cfg.example.empty()) return bundled_arrangement(cfg.example);
  if (cfg.input.empty()) throw InputError("no input file");
  return load_arrangement(cfg.input);
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> c{"lattice", "poincare", "csm",  "modules",
                                          "resolution", "chern",  "nval", "verify"};
  return c;
}

void validate(const JobConfig& cfg) {
  const auto& cmds = cli_commands();
  if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end())
    throw InputError("unknown command " + cfg.command);
  auto only = [&](bool set, const char* flag, std::initializer_list<const char*> allowed) {
    if (!set) return;
    for (const char* c : allowed)
      if (cfg.command == c) return;
    throw InputError(std::string(flag) + " is not supported by " + cfg.command);
  };
  only(cfg.assume_locally_tame, "--assume-locally-tame", {"verify"});
  only(cfg.chart.has_value(), "--chart", {"nval", "verify"});
  only(cfg.degree_cap.has_value(), "--degree-cap", {"modules", "nval", "verify"});
  only(cfg.seed.has_value(), "--seed", {"poincare"});
  only(cfg.module.has_value(), "--module", {"resolution"});
  only(cfg.no_matrices, "--no-matrices", {"resolution"});
  if (cfg.degree_cap && *cfg.degree_cap < 1) throw InputError("--degree-cap must be positive");
}

RunResult run(const JobConfig& cfg) {
  RunResult rr;
  Output o;
  auto start = std::chrono::steady_clock::now();
  Arrangement a;
  try {
    validate(cfg);
    a = load(cfg);
    if (cfg.chart && *cfg.chart >= a.dim) throw InputError("--chart must be a coordinate index below l");
    engine_stats().reset();
    if (cfg.command == "lattice") cmd_lattice(a, o);
    else if (cfg.command == "poincare") cmd_poincare(a, cfg, o);
    else if (cfg.command == "csm") cmd_csm(a, o);
    else if (cfg.command == "modules") cmd_modules(a, cfg, o);
    else if (cfg.command == "resolution") cmd_resolution(a, cfg, o);
    else if (cfg.command == "chern") cmd_chern(a, o);
    else if (cfg.command == "nval") cmd_nval(a, cfg, o);
    else cmd_verify(a, cfg, o);
  } catch (const InputError& e) {
    rr.exit_code = kExitInput;
    rr.err = std::string("error: ") + e.what() + "\n";
    return rr;
  } catch (const HypothesisError& e) {
    o.exit_code = kExitHypothesis;
    o.notes.push_back(e.what());
  } catch (const std::exception& e) {
    rr.exit_code = kExitInput;
    rr.err = std::string("internal error: ") + e.what() + "\n";
    return rr;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rr.exit_code = o.exit_code;
  if (cfg.format == OutputFormat::kJson)
    for (const auto& n : o.notes) rr.err += "note: " + n + "\n";

  auto& st = engine_stats();
  if (cfg.format == OutputFormat::kJson) {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = cfg.command;
    j["arrangement"] = arrangement_json(a);
    j["status"] = o.exit_code == kExitOk ? "ok" : "hypothesis_failure";
    j["notes"] = o.notes;
    j["result"] = o.result;
    j["engine"] = {{"spairs_reduced", st.spairs_reduced.load()},
                   {"zero_reductions", st.zero_reductions.load()},
                   {"max_degree", st.max_degree.load()}};
    if (cfg.timing) j["timing_seconds"] = seconds;
    rr.out = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << cfg.command << ": l = " << a.dim << ", n = " << a.size() << "\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
      os << "  H" << i << ": " << hyperplane_to_string(a, i);
      if (!a.labels.empty()) os << "  [" << a.labels[i] << "]";
      os << "\n";
    }
    os << o.text.str();
    for (const auto& n : o.notes) os << "note: " << n << "\n";
    os << "engine: " << st.spairs_reduced.load() << " S-pairs reduced, max degree " << st.max_degree.load() << "\n";
    if (cfg.timing) os << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
    rr.out = os.str();
  }
  return rr;
}

}  // namespace logchern
