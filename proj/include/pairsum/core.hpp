#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pairsum/error.hpp"

namespace pairsum {

using Int = std::int64_t;

// g-mode allows arbitrary integers, h-mode requires strictly positive ones.
enum class Mode { G, H };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// A subset of the ground set {1, ..., 2n}, stored as a bit-vector.
class SumSet {
public:
    explicit SumSet(Int n);

    /// Throws InvalidInput if n < 1 or a member lies outside [1, 2n].
    /// Duplicates and order are tolerated here; the JSON reader is stricter.
    static SumSet from_members(Int n, std::span<const Int> members);
    static SumSet full(Int n);
    static SumSet odds(Int n);

    Int n() const noexcept { return n_; }
    Int ground() const noexcept { return 2 * n_; }
    std::size_t size() const noexcept;

    bool contains(Int value) const noexcept
    {
        if (value < 1 || value > 2 * n_) {
            return false;
        }
        const auto bit = static_cast<std::uint64_t>(value - 1);
        return (words_[bit >> 6] >> (bit & 63)) & 1U;
    }

    void insert(Int value);
    void erase(Int value);

    std::vector<Int> members() const;
    std::vector<Int> evens() const;

    /// Membership as a 64-bit mask (bit e-1 for element e); requires 2n <= 64.
    std::uint64_t mask() const;
    static SumSet from_mask(Int n, std::uint64_t mask);

    friend bool operator==(const SumSet&, const SumSet&) = default;

private:
    Int n_;
    std::vector<std::uint64_t> words_;
};

struct Witness {
    std::vector<Int> values; // strictly increasing
    Mode mode = Mode::G;

    /// Validates the invariants (k >= 3, strictly increasing, sign rules).
    static Witness make(std::vector<Int> values, Mode mode);
    std::size_t k() const noexcept { return values.size(); }
};

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
    Int lo = 0;
    Int hi = -1;

    bool empty() const noexcept { return hi < lo; }
    Int length() const noexcept { return empty() ? 0 : hi - lo + 1; }
    bool contains(Int v) const noexcept { return lo <= v && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Certificate {
    std::optional<Witness> witness; // engaged iff outcome is "found"
    Interval universe;
    std::uint64_t examined = 0;     // search nodes visited
    double elapsed_ms = 0.0;        // informational; never serialized

    bool found() const noexcept { return witness.has_value(); }
};

/// Every witness for any A within {1..2n} has all values in the returned
/// interval: g-mode [2-n, 2n-k+2], h-mode [1, 2n-k+1].
Interval candidate_universe(Int n, int k, Mode mode);

/// All k(k-1)/2 pairwise sums of w lie in A.
bool verify_witness(const SumSet& set, const Witness& witness);

/// Decides whether A admits a k-witness. A found witness is the
/// lexicographically smallest one over the candidate universe.
Certificate find_witness(const SumSet& set, int k, Mode mode);

/// Calls `visit` on every witness in lexicographic order until it returns
/// false. Returns the number of search nodes visited.
std::uint64_t enumerate_witnesses(const SumSet& set, int k, Mode mode,
                                  const std::function<bool(std::span<const Int>)>& visit);

} // namespace pairsum
