#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "pairsum/extremal.hpp"

using namespace pairsum;

namespace {

struct Reference {
    int size = -1;
    std::vector<Int> lex_min;
};

// Maximum witness-free subset of {1..2n} by scanning every subset with the
// naive witness search.
Reference brute_max(Int n, int k, Mode mode)
{
    Reference best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) {
        const int size = std::popcount(mask);
        if (size < best.size) {
            continue;
        }
        const auto set = oracle::from_mask(mask);
        if (oracle::first_witness(set, n, k, mode == Mode::H)) {
            continue;
        }
        std::vector<Int> members(set.begin(), set.end());
        if (size > best.size || members < best.lex_min) {
            best.size = size;
            best.lex_min = std::move(members);
        }
    }
    return best;
}

} // namespace

TEST_CASE("max_witnessfree examples")
{
    const auto r33 = max_witnessfree(3, 3, Mode::G, Strategy::Exhaustive);
    CHECK(r33.extremal_set.size() == 3);
    CHECK(r33.threshold == 1);
    CHECK(r33.extremal_set.members() == std::vector<Int>{1, 2, 4});
    CHECK_FALSE(find_witness(SumSet::odds(3), 3, Mode::G).found());

    const auto r23 = max_witnessfree(2, 3, Mode::G, Strategy::Exhaustive);
    CHECK(r23.extremal_set.size() == 3);
    CHECK(r23.threshold == 2);
    CHECK(r23.extremal_set.members() == std::vector<Int>{1, 2, 4});
    const SumSet remark = SumSet::from_members(2, std::vector<Int>{2, 3, 4});
    CHECK_FALSE(find_witness(remark, 3, Mode::G).found());

    const auto r55 = max_witnessfree(5, 5, Mode::G, Strategy::Exhaustive);
    CHECK(r55.extremal_set.size() == 9);
    CHECK(r55.threshold == 5);
    CHECK(r55.extremal_set.members() == std::vector<Int>{1, 2, 3, 4, 5, 6, 8, 9, 10});
    const SumSet point = SumSet::from_members(5, std::vector<Int>{1, 2, 4, 5, 6, 7, 8, 9, 10});
    CHECK_FALSE(find_witness(point, 5, Mode::G).found());

    CHECK(max_witnessfree(5, 5, Mode::G, Strategy::BranchAndBound).extremal_set == r55.extremal_set);
}

TEST_CASE("exact_threshold examples")
{
    CHECK(exact_threshold(4, 3, Mode::G).value == 1);
    CHECK(exact_threshold(5, 4, Mode::G).value == 3);
    CHECK(exact_threshold(5, 3, Mode::H).value == 2);
    CHECK(exact_threshold(1, 3, Mode::G).value == 2);
    CHECK(exact_threshold(1, 3, Mode::G).vacuous_above);
    CHECK(exact_threshold(2, 3, Mode::G).value == 2);
    CHECK_FALSE(exact_threshold(2, 3, Mode::G).vacuous_above);
}

TEST_CASE("budget guards")
{
    SearchLimits limits;
    limits.exhaustive_max_ground = 10;
    try {
        max_witnessfree(6, 3, Mode::G, Strategy::Exhaustive, limits);
        FAIL("expected budget-exceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    try {
        max_witnessfree(21, 3, Mode::G, Strategy::BranchAndBound);
        FAIL("expected budget-exceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("agreement with brute force, n <= 5")
{
    for (Int n = 1; n <= 5; ++n) {
        for (int k = 3; k <= 5; ++k) {
            for (Mode mode : {Mode::G, Mode::H}) {
                const Reference ref = brute_max(n, k, mode);
                for (auto strategy : {Strategy::Exhaustive, Strategy::BranchAndBound}) {
                    const auto r = max_witnessfree(n, k, mode, strategy);
                    CAPTURE(n);
                    CAPTURE(k);
                    CHECK(static_cast<int>(r.extremal_set.size()) == ref.size);
                    CHECK(r.extremal_set.members() == ref.lex_min);
                    CHECK(r.threshold == ref.size - n + 1);
                    CHECK(r.vacuous_above == (n + r.threshold > 2 * n));
                }
            }
        }
    }
}

TEST_CASE("minimal sum masks characterize witness-freeness, n <= 5")
{
    for (Int n = 1; n <= 5; ++n) {
        for (int k = 3; k <= 5; ++k) {
            for (Mode mode : {Mode::G, Mode::H}) {
                const auto all = sum_masks(n, k, mode, false);
                const auto minimal = sum_masks(n, k, mode, true);
                CHECK(minimal.size() <= all.size());
                for (std::uint64_t m : minimal) {
                    for (std::uint64_t other : minimal) {
                        if (other != m) {
                            CHECK((other & ~m) != 0);
                        }
                    }
                }
                for (std::uint64_t set = 0; set < (std::uint64_t{1} << (2 * n)); ++set) {
                    auto contains_any = [set](const std::vector<std::uint64_t>& masks) {
                        return std::any_of(masks.begin(), masks.end(),
                                           [set](std::uint64_t m) { return (set & m) == m; });
                    };
                    const bool blocked = contains_any(all);
                    CHECK(blocked == contains_any(minimal));
                    CHECK(blocked == find_witness(SumSet::from_mask(n, set), k, mode).found());
                }
            }
        }
    }
}

TEST_CASE("strategy agreement, sandwich and monotonicity in k")
{
    SearchLimits limits;
    limits.threads = 4;
    for (Int n = 1; n <= 8; ++n) {
        for (int k = 3; k <= 6; ++k) {
            Int prev_g = 0;
            for (Mode mode : {Mode::G, Mode::H}) {
                const auto e = max_witnessfree(n, k, mode, Strategy::Exhaustive);
                const auto b = max_witnessfree(n, k, mode, Strategy::BranchAndBound, limits);
                CHECK(e.threshold == b.threshold);
                CHECK(e.extremal_set == b.extremal_set);
                if (mode == Mode::G) {
                    prev_g = e.threshold;
                } else {
                    CHECK(prev_g <= e.threshold);
                }
            }
            const Int h = exact_threshold(n, k, Mode::H).value;
            CHECK(h <= exact_threshold(n, k + 1, Mode::G).value);
            for (Mode mode : {Mode::G, Mode::H}) {
                CHECK(exact_threshold(n, k, mode).value <= exact_threshold(n, k + 1, mode).value);
            }
        }
    }
}

TEST_CASE("definition consistency for 2n <= 16")
{
    for (Int n = 2; n <= 8; ++n) {
        for (int k = 3; k <= 5; ++k) {
            for (Mode mode : {Mode::G, Mode::H}) {
                const auto r = max_witnessfree(n, k, mode, Strategy::Exhaustive);
                const int need = static_cast<int>(n + r.threshold);
                CHECK_FALSE(find_witness(r.extremal_set, k, mode).found());
                // At the threshold size every set has a witness; one below,
                // the extremal set shows that some set does not.
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) {
                    const int size = std::popcount(mask);
                    if (size == need || size == need + 1) {
                        REQUIRE(find_witness(SumSet::from_mask(n, mask), k, mode).found());
                    }
                }
            }
        }
    }
}

TEST_CASE("downward closure of extremal sets")
{
    std::mt19937_64 rng(31);
    for (Int n = 3; n <= 9; ++n) {
        const auto r = max_witnessfree(n, 5, Mode::G, Strategy::Exhaustive);
        const auto members = r.extremal_set.members();
        for (int trial = 0; trial < 200; ++trial) {
            SumSet sub(n);
            for (Int v : members) {
                if (rng() % 2 == 0) {
                    sub.insert(v);
                }
            }
            CHECK_FALSE(find_witness(sub, 5, Mode::G).found());
        }
    }
}

TEST_CASE("hunt")
{
    HuntOptions opts;
    opts.target = 4;
    opts.seed = 1;
    std::vector<nlohmann::json> events;
    opts.progress = [&](const nlohmann::json& e) { events.push_back(e); };
    const auto found = hunt(5, 5, Mode::G, opts);
    REQUIRE(found.has_value());
    CHECK(found->size() >= 9);
    CHECK_FALSE(find_witness(*found, 5, Mode::G).found());
    REQUIRE_FALSE(events.empty());
    CHECK(events.back()["event"] == "done");

    HuntOptions none;
    none.target = 2;
    none.budget = 100'000;
    CHECK_FALSE(hunt(3, 3, Mode::G, none).has_value());

    // Same seed, same answer.
    HuntOptions again = opts;
    again.progress = nullptr;
    CHECK(hunt(5, 5, Mode::G, again) == found);
}
