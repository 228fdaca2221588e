#include "logchern/chern_csm.hpp"

#include <functional>
#include <stdexcept>

#include "logchern/errors.hpp"
#include "logchern/parallel.hpp"

namespace logchern {

namespace {

Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

ChernPoly from_poincare(const PoincarePoly& pi, std::size_t l) {
  if (pi.b.size() > l) throw std::invalid_argument("Poincare polynomial longer than the truncation");
  return ChernPoly(l, pi.b);
}

ChernPoly top_class(std::size_t l, const Integer& c) {
  ChernPoly p(l);
  p[l - 1] = c;
  return p;
}

}  // namespace

ChowClass chern_to_chow(const ChernPoly& c) { return c; }

ChernPoly chern_from_resolution(const ResolutionData& res, int shift, std::size_t l) {
  ChernPoly c = ChernPoly::one(l);
  for (std::size_t i = 0; i < res.terms.size(); ++i) {
    for (int a : res.terms[i].twists) {
      ChernPoly line = ChernPoly::linear(l, Integer(shift - a));
      c = i % 2 ? c * line.inverse() : c * line;
    }
  }
  return c;
}

ChernPoly chern_dual(const ChernPoly& c) { return c.negated_variable(); }

ChernPoly twist_chern(const ChernPoly& c, long rank, long m) {
  ChernPoly out(c.length());
  for (std::size_t k = 0; k < c.length(); ++k) {
    Integer acc = 0;
    Integer mpow = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      // i = k - j
      std::size_t i = k - j;
      acc += binomial(rank - static_cast<long>(i), static_cast<long>(j)) * mpow * c[i];
      mpow *= m;
    }
    out[k] = acc;
  }
  return out;
}

ChernPoly twist_chern(const ChernPoly& c, std::size_t l) { return twist_chern(c, static_cast<long>(l) - 1, 1); }

ChernPoly chern_point(int d) {
  if (d < 1) throw std::invalid_argument("chern_point needs d >= 1");
  ChernPoly p = ChernPoly::one(static_cast<std::size_t>(d) + 1);
  p[d] = (d % 2 ? 1 : -1) * factorial(d - 1);
  return p;
}

ChowClass csm_complement(const PoincarePoly& pi, std::size_t l) {
  if (pi.b.size() > l) throw std::invalid_argument("Poincare polynomial longer than l");
  ChowClass out(l);
  long r = static_cast<long>(l) - 1;
  for (std::size_t k = 0; k < l; ++k) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= k && i < pi.b.size(); ++i)
      acc += (i % 2 ? -1 : 1) * pi.b[i] * binomial(r - static_cast<long>(i), static_cast<long>(k - i));
    out[k] = acc;
  }
  return out;
}

ChowClass csm_of_divisor(const PoincarePoly& pi, std::size_t l) {
  ChowClass space(l);
  for (std::size_t k = 0; k < l; ++k) space[k] = binomial(static_cast<long>(l), static_cast<long>(k));
  return space - csm_complement(pi, l);
}

Integer defect_coefficient(int l) {
  if (l < 2) throw std::invalid_argument("defect coefficient needs l >= 2");
  Integer a = (l - 1) % 2 ? -1 : 1;
  Integer b = (l - 2) % 2 ? -1 : 1;
  return a + b * factorial(l - 2);
}

ChernPoly verify_mustata_schenck(const ChernPoly& ct, const PoincarePoly& pi) {
  return ct - from_poincare(pi, ct.length());
}

ChernPoly verify_denham_schulze(const ChernPoly& ct, const PoincarePoly& pi, long n, std::size_t l) {
  if (ct.length() != l) throw std::invalid_argument("truncation length differs from l");
  return verify_mustata_schenck(ct, pi) - top_class(l, Integer(n));
}

VerificationReport verify_main_theorem(const Arrangement& a, const VerifyOptions& opts) {
  return verify_main_theorem(a, compute_log_modules(a), opts);
}

VerificationReport verify_main_theorem(const Arrangement& a, const LogModuleBundle& mods,
                                       const VerifyOptions& opts) {
  if (a.affine) throw InputError("verification needs a central arrangement");
  if (a.size() == 0) throw InputError("verification needs at least one hyperplane");
  if (a.dim < 2) throw InputError("verification needs l >= 2");
  std::size_t l = a.dim;
  VerificationReport r;
  r.l = l;
  r.defect_coeff = defect_coefficient(static_cast<int>(l));

  ResolutionData res_d0, res_dual, res_om0;
  std::optional<NonFreeLocusReport> locus;
  NonFreeOptions nf;
  nf.per_flat = opts.per_flat;
  nf.chart = opts.chart;
  nf.degree_cap = opts.degree_cap;
  std::vector<std::function<void()>> jobs{
      [&] { r.pi_projective = poincare_projective(a); },
      [&] { res_d0 = free_resolution(mods.d0.presentation); },
      [&] { res_dual = free_resolution(module_dual(mods.omega10.presentation)); },
      [&] { res_om0 = free_resolution(mods.omega10.presentation); },
      [&] {
        try {
          locus = nonfree_locus(a, mods.omega10, nf);
        } catch (const HypothesisError&) {
          locus.reset();
        }
      },
  };
  parallel_for(jobs.size(), [&](std::size_t i) { jobs[i](); });

  r.lhs = chern_to_chow(chern_from_resolution(res_d0, 0, l));
  r.lhs_via_dual = chern_to_chow(chern_from_resolution(res_dual, 0, l));
  r.chern_omega_1 = chern_from_resolution(res_om0, 1, l);
  r.pdim_omega10 = static_cast<int>(res_om0.length());
  r.csm = csm_complement(r.pi_projective, l);
  r.mustata_schenck_residual = verify_mustata_schenck(r.chern_omega_1, r.pi_projective);

  auto& h = r.hypotheses;
  h.free = r.pdim_omega10 == 0;
  if (locus) {
    h.ext1_cone_dim = locus->cone_dim;
    h.zero_dim_nonfree_locus = true;
    h.locally_free = locus->n_projective == 0;
    r.n = locus->n_projective;
    r.n_per_flat = locus->per_flat_total;
  } else {
    h.ext1_cone_dim = krull_dim(ext1_against_ring(mods.omega10.presentation));
  }
  if (h.free) {
    h.local_tameness = "free";
  } else if (h.locally_free) {
    h.local_tameness = "locally free";
  } else if (l <= 4) {
    h.local_tameness = "automatic in dimension <= 4";
  } else if (opts.assume_locally_tame) {
    h.local_tameness = "assumed";
  } else {
    h.local_tameness = "unverified";
  }

  if (r.n) {
    long n = *r.n;
    r.predicted_defect = top_class(l, r.defect_coeff * n);
    r.residual = r.lhs - r.csm - *r.predicted_defect;
    r.denham_schulze_residual = verify_denham_schulze(r.chern_omega_1, r.pi_projective, n, l);
    Integer point_top = ((l - 2) % 2 ? -1 : 1) * factorial(static_cast<long>(l) - 2) * n;
    ChernPoly points = ChernPoly::one(l) + top_class(l, point_top);
    r.lhs_via_twist = chern_to_chow(twist_chern(chern_dual(r.chern_omega_1) * points, l));
  }
  return r;
}

}  // namespace logchern
