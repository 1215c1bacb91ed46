#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "pairsum/families.hpp"
#include "pairsum/sidon.hpp"

using namespace pairsum;

namespace {

std::set<Int> as_set(const SumSet& s)
{
    const auto m = s.members();
    return {m.begin(), m.end()};
}

Int floor_log2(Int v)
{
    return static_cast<Int>(std::bit_width(static_cast<std::uint64_t>(v))) - 1;
}

// Certificate plus an independent brute-force cross-check.
bool certified_absent(Family f, Int n, int k, Mode mode)
{
    const auto cert = certify_family(f, n, k, mode);
    const auto ref = oracle::first_witness(as_set(cert.set), n, k, mode == Mode::H);
    REQUIRE(cert.certificate.found() == ref.has_value());
    if (ref) {
        CHECK(cert.certificate.witness->values == *ref);
    }
    return !cert.certificate.found();
}

} // namespace

TEST_CASE("family_set examples")
{
    CHECK(family_set(Family::Powers2, 6).members() == std::vector<Int>{1, 2, 3, 4, 5, 7, 8, 9, 11});
    CHECK(family_set(Family::G5Lower, 5).members() == std::vector<Int>{1, 3, 5, 6, 7, 8, 9, 10});
    CHECK(family_set(Family::G5Point, 5).members() == std::vector<Int>{1, 2, 4, 5, 6, 7, 8, 9, 10});
    CHECK(family_set(Family::OddPlusTwo, 3).members() == std::vector<Int>{1, 2, 3, 5});
    CHECK(family_set(Family::G4Lower, 4).members() == std::vector<Int>{1, 3, 5, 6, 7, 8});
}

TEST_CASE("family ranges")
{
    auto out_of_range = [](Family f, Int n) {
        try {
            family_set(f, n);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::OutOfRange;
        }
        return false;
    };
    CHECK(out_of_range(Family::OddPlusTwo, 0));
    CHECK(out_of_range(Family::Powers2, 0));
    CHECK(out_of_range(Family::G4Lower, 1));
    CHECK(out_of_range(Family::G5Lower, 2));
    CHECK(out_of_range(Family::G5Point, 4));
    CHECK(out_of_range(Family::G5Point, 6));
    CHECK(out_of_range(Family::Sidon6, 1));
    CHECK_FALSE(out_of_range(Family::Sidon6, 2));
    CHECK(parse_family("g5_point") == Family::G5Point);
    CHECK_FALSE(parse_family("g6").has_value());
    for (auto f : {Family::OddPlusTwo, Family::Powers2, Family::G4Lower, Family::G5Lower, Family::G5Point,
                   Family::Sidon6}) {
        CHECK(parse_family(to_string(f)) == f);
    }
}

TEST_CASE("size formulas")
{
    for (Int n = 1; n <= 200; ++n) {
        CHECK(family_set(Family::OddPlusTwo, n).size() == static_cast<std::size_t>(n + 1));
        CHECK(family_set(Family::Powers2, n).size() == static_cast<std::size_t>(n + floor_log2(2 * n)));
        if (n >= 2) {
            CHECK(family_set(Family::G4Lower, n).size() == static_cast<std::size_t>(n + 2));
            const SumSet s6 = family_set(Family::Sidon6, n);
            const auto sidon = build_sidon(n / 2, SidonMethod::Modular);
            CHECK(s6.size() == static_cast<std::size_t>(n) + sidon.size());
            for (Int a : sidon) {
                CHECK(s6.contains(4 * a - 2));
            }
        }
        if (n >= 3) {
            CHECK(family_set(Family::G5Lower, n).size() == static_cast<std::size_t>(n + 3));
        }
    }
    CHECK(family_set(Family::G5Point, 5).size() == 9);
}

TEST_CASE("certify_family examples")
{
    CHECK(certified_absent(Family::Powers2, 6, 5, Mode::H));
    const auto g = certify_family(Family::Powers2, 6, 5, Mode::G);
    REQUIRE(g.certificate.found());
    CHECK(g.certificate.witness->values == std::vector<Int>{-1, 2, 3, 5, 6});
    CHECK(g.excess == 3);
    CHECK(certified_absent(Family::G4Lower, 6, 4, Mode::G));

    try {
        certify_family(Family::Powers2, 3000, 5, Mode::G);
        FAIL("expected budget-exceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK_NOTHROW(certify_family(Family::Powers2, 3000, 5, Mode::G, 10'000));
}

TEST_CASE("lower-bound families are witness-free where claimed")
{
    for (Int n = 2; n <= 9; ++n) {
        CHECK(certified_absent(Family::Powers2, n, 5, Mode::H));
        CHECK(certified_absent(Family::Sidon6, n, 6, Mode::G));
        CHECK(certified_absent(Family::Sidon6, n, 6, Mode::H));
        CHECK(certified_absent(Family::G4Lower, n, 4, Mode::G));
        if (n >= 3) {
            CHECK(certified_absent(Family::G5Lower, n, 5, Mode::G));
        }
        if (n >= 4) {
            CHECK(certified_absent(Family::OddPlusTwo, n, 3, Mode::H));
        }
        CHECK(certified_absent(Family::Powers2, n, 5, Mode::G) == (n < 6));
    }
    CHECK(certified_absent(Family::G5Point, 5, 5, Mode::G));
    for (Int n = 10; n <= 40; ++n) {
        CHECK_FALSE(certify_family(Family::Powers2, n, 5, Mode::H).certificate.found());
        CHECK_FALSE(certify_family(Family::G5Lower, n, 5, Mode::G).certificate.found());
        CHECK_FALSE(certify_family(Family::OddPlusTwo, n, 3, Mode::H).certificate.found());
        CHECK_FALSE(certify_family(Family::Sidon6, n, 6, Mode::G).certificate.found());
    }
}
