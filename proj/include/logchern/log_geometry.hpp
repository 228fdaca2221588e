#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logchern/arrangements.hpp"
#include "logchern/modules.hpp"

namespace logchern {

struct DefiningData {
  std::size_t nvars = 0;
  MultiPoly f;
  int d = 0;
  std::vector<MultiPoly> partials;
};

// f = product of the linear forms; throws std::logic_error if the Euler
// identity sum z_i f_i = d f fails.
DefiningData defining_data(const Arrangement& a);

enum class LogModuleKind { kD, kD0, kOmega1, kOmega10 };
std::string to_string(LogModuleKind k);

// A log module as a graded submodule of `ambient` (S(1)^l for derivations,
// numerators f*omega in S(d-1)^l for forms) with a presentation on its
// minimal generators. Degrees: deg(sum a_i d_i) = deg(a) - 1, and a form
// with numerator g = f omega has degree deg(g) + 1 - d.
struct LogModule {
  LogModuleKind kind = LogModuleKind::kD0;
  GradedFreeModule ambient;
  std::vector<FreeModuleElement> generators;
  GradedModulePresentation presentation;

  std::vector<int> generator_degrees() const { return presentation.target.twists; }
};

LogModule derivation_module_d0(const DefiningData& dd);
// D = S chi + D0.
LogModule derivation_module(const DefiningData& dd);
// Numerators g with f_i g_j - f_j g_i in (f) for all i < j.
LogModule log_forms(const DefiningData& dd);
// Kernel of contraction with the Euler derivation.
LogModule relative_log_forms(const DefiningData& dd, const LogModule& omega1);

struct FreenessReport {
  bool is_free = false;
  int pdim = 0;
  std::vector<int> exponents;  // sorted; only when free
  std::optional<bool> saito_ok;  // determinant check, D with l generators
};

FreenessReport freeness_test(const LogModule& lm);
// With the defining data the Saito determinant is checked for D and D0.
FreenessReport freeness_test(const LogModule& lm, const DefiningData* dd);
// det of the coefficient matrix of l derivations (rows = generators).
MultiPoly saito_determinant(const std::vector<FreeModuleElement>& derivations);

struct FlatContribution {
  std::vector<std::size_t> hyperplanes;
  std::vector<Rational> point;
  std::vector<Rational> chart;  // the chart is {chart . z = 1}
  long n = 0;
};

struct NonFreeLocusReport {
  GradedModulePresentation ext1;
  int cone_dim = -1;
  long n_projective = 0;
  UniPolyQ ext1_hilbert_polynomial;
  std::vector<FlatContribution> per_flat;
  std::optional<long> per_flat_total;
};

struct NonFreeOptions {
  bool per_flat = false;
  std::optional<std::size_t> chart;  // preferred chart coordinate
  int degree_cap = 200;
};

// Throws HypothesisError when the Ext^1 support has affine dimension > 1.
NonFreeLocusReport nonfree_locus(const Arrangement& a, const LogModule& omega10,
                                 const NonFreeOptions& opts = {});

// N of the localization at a codim-(l-1) flat, computed in the chart
// {chart . z = 1} as the length of Ext^1 of the translated central
// arrangement.
long local_defect(const Arrangement& a, const Flat& x, const std::vector<Rational>& chart,
                  int degree_cap = 200);
// The arrangement A_X seen in the chart {chart . z = 1}, moved to the origin.
Arrangement chart_arrangement(const Arrangement& a, const Flat& x, const std::vector<Rational>& chart);

// Everything the CLI needs about one arrangement.
struct LogModuleBundle {
  DefiningData dd;
  LogModule d0;
  LogModule omega1;
  LogModule omega10;
};
LogModuleBundle compute_log_modules(const Arrangement& a);

}  // namespace logchern
