#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logchern/arrangements.hpp"
#include "logchern/log_geometry.hpp"
#include "logchern/modules.hpp"
#include "logchern/unipoly.hpp"

namespace logchern {

// Chern polynomials live in Z[t]/<t^l>, Chow classes of P^{l-1} in
// Z[h]/<h^l>. Both are TruncatedPolyZ; chern_to_chow is the one place where
// t is read as h.
using ChernPoly = TruncatedPolyZ;
using ChowClass = TruncatedPolyZ;

ChowClass chern_to_chow(const ChernPoly& c);

// prod_i prod_j (1 + (shift - a_ij) t)^{(-1)^i} mod t^l for terms
// sum_j S(-a_ij).
ChernPoly chern_from_resolution(const ResolutionData& res, int shift, std::size_t l);
// c(-t)
ChernPoly chern_dual(const ChernPoly& c);
// Twist of a rank r class by O(m): c'_k = sum_i binom(r-i, k-i) m^{k-i} c_i.
ChernPoly twist_chern(const ChernPoly& c, long rank, long m);
// Rank l-1 twist by O(1).
ChernPoly twist_chern(const ChernPoly& c, std::size_t l);
// 1 + (-1)^{d-1} (d-1)! t^d in Z[t]/<t^{d+1}>.
ChernPoly chern_point(int d);

ChowClass csm_complement(const PoincarePoly& pi, std::size_t l);
ChowClass csm_of_divisor(const PoincarePoly& pi, std::size_t l);
// (-1)^{l-1} + (-1)^{l-2} (l-2)!
Integer defect_coefficient(int l);

// ct - pi
ChernPoly verify_mustata_schenck(const ChernPoly& ct, const PoincarePoly& pi);
// ct - pi - N t^{l-1}
ChernPoly verify_denham_schulze(const ChernPoly& ct, const PoincarePoly& pi, long n, std::size_t l);

struct VerifyOptions {
  bool assume_locally_tame = false;
  bool per_flat = true;
  std::optional<std::size_t> chart;
  int degree_cap = 200;
};

struct Hypotheses {
  bool central = true;
  bool free = false;
  bool locally_free = false;
  bool zero_dim_nonfree_locus = false;
  // "free", "locally free", "automatic in dimension <= 4", "assumed", or
  // "unverified"
  std::string local_tameness;
  int ext1_cone_dim = -1;
  bool satisfied() const { return zero_dim_nonfree_locus && local_tameness != "unverified"; }
};

struct VerificationReport {
  std::size_t l = 0;
  PoincarePoly pi_projective;
  ChowClass lhs;                  // from the resolution of D0
  ChowClass lhs_via_dual;         // from the resolution of Hom(Omega1_0, S)
  std::optional<ChowClass> lhs_via_twist;  // dualize c(Omega(1)), add the points, twist
  ChowClass csm;
  ChernPoly chern_omega_1;        // c_t(Omega^1(PA)(1))
  std::optional<long> n;
  std::optional<long> n_per_flat;
  Integer defect_coeff;
  std::optional<ChowClass> predicted_defect;
  std::optional<ChowClass> residual;
  std::optional<ChernPoly> mustata_schenck_residual;
  std::optional<ChernPoly> denham_schulze_residual;
  int pdim_omega10 = 0;
  Hypotheses hypotheses;

  bool holds() const { return residual && residual->is_zero(); }
};

VerificationReport verify_main_theorem(const Arrangement& a, const VerifyOptions& opts = {});
VerificationReport verify_main_theorem(const Arrangement& a, const LogModuleBundle& mods,
                                       const VerifyOptions& opts = {});

}  // namespace logchern
