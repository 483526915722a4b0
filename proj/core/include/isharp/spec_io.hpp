#pragma once

#include "isharp/cone.hpp"
#include "isharp/formulas.hpp"
#include "isharp/knotcx.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace isharp {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Knot spec, either thin {"name","alexander":[[coef,power],...],"tau"} or explicit
// {"generators":[{"id","alex","z2"}],"d_plus":[[src,tgt,num,den]],"d_minus":[...],
//  "genus","tau"}.
KnotComplex parse_knot_spec(const std::string& text);
std::string knot_spec_to_json(const KnotComplex& k);

// {"tau": int, "base_dim": int, "gamma0": optional int}
SutureDimProfile parse_companion_profile(const std::string& text);

std::string to_json(const SurgeryResult& r);
std::string to_json(const std::vector<SurgeryResult>& rs);
SurgeryResult surgery_result_from_json(const std::string& text);
std::vector<SurgeryResult> surgery_results_from_json(const std::string& text);

}  // namespace isharp
