#pragma once

#include <optional>
#include <string_view>

#include "pairsum/core.hpp"

namespace pairsum {

// Named lower-bound sets:
//   odd_plus_two  odds + {2}                         n >= 1
//   powers2       odds + {2, 4, ..., 2^floor(log2 2n)} n >= 1
//   g4_lower      odds + {2n-2, 2n}                  n >= 2
//   g5_lower      odds + {2n-4, 2n-2, 2n}            n >= 3
//   g5_point      {1, 2, 4, 5, ..., 10}              n == 5
//   sidon6        odds + {4a - 2 : a in S}, S a modular Sidon set in [1, n/2]
enum class Family { OddPlusTwo, Powers2, G4Lower, G5Lower, G5Point, Sidon6 };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

SumSet family_set(Family family, Int n);

struct FamilyCertificate {
    Family family;
    Int n;
    int k;
    Mode mode;
    SumSet set;
    Certificate certificate;
    Int excess; // |A| - n
};

/// Default cap on the candidate universe size for certify_family.
inline constexpr Int kDefaultUniverseCap = 4096;

/// find_witness on the family set. Throws OutOfRange for an invalid n and
/// BudgetExceeded when the candidate universe is larger than `universe_cap`.
FamilyCertificate certify_family(Family family, Int n, int k, Mode mode, Int universe_cap = kDefaultUniverseCap);

} // namespace pairsum
