#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pairsum/core.hpp"

namespace pairsum {

enum class Strategy { Exhaustive, BranchAndBound };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view text);

struct SearchLimits {
    Int exhaustive_max_ground = 24; // 2n
    Int bnb_max_ground = 40;        // 2n
    unsigned threads = 1;
};

struct ThresholdResult {
    Int n = 0;
    int k = 3;
    Mode mode = Mode::G;
    Int threshold = 0;
    SumSet extremal_set{1};     // lexicographically smallest maximum witness-free set
    Strategy strategy = Strategy::Exhaustive;
    std::uint64_t nodes = 0;    // subsets scanned or search nodes visited
    std::size_t sum_masks = 0;  // distinct pairwise-sum sets over the universe
    std::size_t minimal_masks = 0;
    bool vacuous_above = false; // n + threshold > 2n
};

/// Pairwise-sum sets (bit s-1 for sum s) of every candidate witness for the
/// ground set {1..2n}. With `minimal`, only inclusion-minimal ones are kept.
/// A set is witness-free iff it contains none of these masks. Needs 2n <= 64.
std::vector<std::uint64_t> sum_masks(Int n, int k, Mode mode, bool minimal = true);

/// Maximum witness-free subset of {1..2n}. Throws BudgetExceeded above the
/// strategy's ground-size limit.
ThresholdResult max_witnessfree(Int n, int k, Mode mode, Strategy strategy, const SearchLimits& limits = {});

struct ThresholdValue {
    Int value = 0;
    bool vacuous_above = false;
};

/// g_k(n) or h_k(n), computed exhaustively when 2n allows it and by
/// branch-and-bound otherwise.
ThresholdValue exact_threshold(Int n, int k, Mode mode, const SearchLimits& limits = {});

struct HuntOptions {
    Int target = 1;                 // look for |A| >= n + target
    std::uint64_t budget = 1'000'000; // search nodes across all witness queries
    std::uint64_t seed = 1;
    /// Receives progress records (restarts, improvements, final status).
    std::function<void(const nlohmann::json&)> progress;
};

/// Randomized descent and local search for a large witness-free set. A
/// returned set has been re-checked witness-free by find_witness.
std::optional<SumSet> hunt(Int n, int k, Mode mode, const HuntOptions& options);

} // namespace pairsum
