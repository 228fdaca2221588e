#pragma once

#include <string>

#include "json.hpp"
#include "logchern/arrangements.hpp"
#include "logchern/chern_csm.hpp"
#include "logchern/log_geometry.hpp"
#include "logchern/modules.hpp"

namespace logchern {

inline constexpr const char* kReportSchema = "logchern.report/1";

nlohmann::json class_json(const TruncatedPolyZ& c);
nlohmann::json poincare_json(const PoincarePoly& p);
nlohmann::json arrangement_json(const Arrangement& a);
nlohmann::json lattice_json(const IntersectionLattice& lat);
// {"F0": {"0": 1}, ...} keyed by twist k of S(k).
nlohmann::json twist_multisets_json(const ResolutionData& r);
// Twist multisets plus matrices (one list of rendered columns per map).
nlohmann::json resolution_json(const ResolutionData& r);
nlohmann::json log_module_json(const LogModule& lm, const FreenessReport& fr, const ResolutionData& res);
nlohmann::json nonfree_json(const NonFreeLocusReport& r);
nlohmann::json verification_json(const VerificationReport& r);

// "F1 = {-3: 2, -4: 1}" per line, then the matrices.
std::string resolution_text(const ResolutionData& r, bool with_matrices);
std::string twist_multiset_text(const std::map<int, int>& m);

}  // namespace logchern
