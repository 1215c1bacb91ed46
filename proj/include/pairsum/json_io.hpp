#pragma once

#include <string_view>

#include <json.hpp>

#include "pairsum/bounds.hpp"
#include "pairsum/core.hpp"
#include "pairsum/extremal.hpp"
#include "pairsum/families.hpp"

namespace pairsum {

// {"n": int, "members": [ascending ints]}
nlohmann::json to_json(const SumSet& set);

/// Rejects missing fields, non-integers, members outside [1, 2n] and member
/// lists that are not strictly ascending (InvalidInput).
SumSet sumset_from_json(const nlohmann::json& value);
SumSet parse_sumset(std::string_view text);

// {"outcome": "found"|"absent", "witness": [ints]|null, "universe": [lo, hi], "examined": int}
nlohmann::json to_json(const Certificate& cert);

nlohmann::json to_json(const ThresholdResult& result);
nlohmann::json to_json(const FamilyCertificate& cert);
nlohmann::json to_json(const GrowthReport& report);

} // namespace pairsum
