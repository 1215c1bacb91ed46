#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <optional>
#include <utility>
#include <vector>

#include "pairsum/core.hpp"

namespace pairsum {

// Sets are passed as strictly increasing sequences.

/// All differences of distinct elements are distinct.
bool is_sidon(std::span<const Int> set);

/// No four distinct elements with a1 + a4 = a2 + a3.
bool is_weak_sidon(std::span<const Int> set);

enum class SidonMethod { Greedy, Modular };

std::string_view to_string(SidonMethod method);
std::optional<SidonMethod> parse_sidon_method(std::string_view text);

/// A Sidon subset of [1, limit].
///
/// Greedy is the Mian-Chowla scan. Modular is the Erdos-Turan family
/// {2pi + (i^2 mod p) + 1 : 0 <= i < p} for the largest prime p with
/// 2p^2 <= limit; every element is at most 2p^2 - p, so nothing is truncated.
/// When no such prime exists (limit < 8) Modular falls back to Greedy.
std::vector<Int> build_sidon(Int limit, SidonMethod method);

/// Pairwise disjoint pairs (x, x + m) inside a set.
struct DifferenceFamily {
    Int m = 0;
    std::vector<std::pair<Int, Int>> pairs; // sorted by start

    std::size_t size() const noexcept { return pairs.size(); }
    std::vector<Int> starts() const;
    std::vector<Int> ends() const;
};

/// Maximum disjoint family for a fixed difference m: each maximal chain
/// x, x+m, x+2m, ... of length L contributes floor(L/2) pairs, taken
/// leftmost-first.
DifferenceFamily disjoint_representations(std::span<const Int> set, Int m);

/// The even difference m > 0 with the largest disjoint family; ties go to the
/// smallest m. Throws DegenerateInput when |set| < 2 and InvalidInput on odd
/// elements.
DifferenceFamily max_disjoint_representations(std::span<const Int> evens);

} // namespace pairsum
