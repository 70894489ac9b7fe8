#pragma once

#include <json.hpp>

#include "padicft/attainability.hpp"
#include "padicft/cyclotomic.hpp"
#include "padicft/schwartz.hpp"

namespace padicft {

// Exact values only: fractions and valuations are "num/den" strings ("inf" for
// +infinity). Integers are JSON numbers when they fit in 64 bits and decimal
// strings otherwise; readers accept both.

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

/// {"num": [...], "den": d}
nlohmann::json to_json(const CycNumber& a);
CycNumber cyc_from_json(const ContextPtr& ctx, const nlohmann::json& j);

PValuation valuation_from_string(const std::string& s);

/// {p, r, e, y, phi, checks, lower_factor_exponent, routes_agree}
nlohmann::json to_json(const WitnessRecord& w);
WitnessRecord witness_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WitnessVerification& v);

/// Fields of AttainabilityReport; per_n entries carry every valuation.
nlohmann::json to_json(const AttainabilityReport& report);

}  // namespace padicft
