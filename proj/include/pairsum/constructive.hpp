#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "pairsum/bounds.hpp"
#include "pairsum/core.hpp"

namespace pairsum {

/// A builder's verified witness plus the intermediate quantities it chose
/// (pigeonholed elements, differences, branch taken) for audit.
struct Construction {
    Witness witness;
    nlohmann::json trace;
};

// Every builder verifies its own output before returning; a failed
// verification is a logic_error, never a silent bad witness.

/// Three integers, for n >= 3 and |A| >= n + 1.
Construction construct_g3(const SumSet& set);

/// Three integers 0 <= b1 < b2 < b3, for n >= 3 and |A| >= n + 1. Sets with
/// 1 missing are shifted down by two and handled recursively; n = 3 is a
/// table lookup.
Construction construct_g3_nonneg(const SumSet& set);

/// Four integers, for n >= 3 and |A| >= n + 3, from three complementary
/// pairs {a, 2n + 1 - a} with a even.
Construction construct_g4(const SumSet& set);

/// Five integers when A contains every odd number of [1, 2n] and
/// |A| >= n + 4, using the four smallest even members.
Construction construct_g5_allodds(const SumSet& set);

/// One level of the even-set recursion: the difference m, the disjoint starts
/// and their partners start + m.
struct ChainLevel {
    Int m = 0;
    std::vector<Int> starts;
    std::vector<Int> ends;
};

/// The c-list c1..ck (every subset sum containing c1 lies in the source set,
/// c2..ck pairwise distinct and non-zero) and the levels that produced it,
/// outermost level first.
struct EvenChainSelection {
    std::vector<ChainLevel> levels;
    std::vector<Int> c;
};

/// Runs the even-set recursion on a strictly increasing set of positive even
/// integers. Throws PreconditionViolation on malformed input and
/// StructureNotFound (subject = the set the base case failed on) when the
/// required repeated difference or equal-sum quadruple is missing.
EvenChainSelection even_lemma_chain(std::span<const Int> evens, int k, BoundVariant variant);

/// k integers with all pairwise sums in `evens`; the weak variant yields
/// strictly positive integers (h-mode), the strict one g-mode integers.
Construction construct_even_lemma(std::span<const Int> evens, int k, BoundVariant variant);

/// Five integers for |A| >= n + C, following the three-branch argument with
/// the constant C as a parameter. Below the true constant a branch's
/// guarantee may fail, reported as BranchGuaranteeFailed.
Construction construct_g5_bounded(const SumSet& set, Int C);

/// Four positive integers for |A| >= n + C (same conventions).
Construction construct_h4_bounded(const SumSet& set, Int C);

} // namespace pairsum
