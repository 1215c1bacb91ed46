#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pairsum/bounds.hpp"

using namespace pairsum;
using Wide = boost::multiprecision::cpp_bin_float_50;

namespace {

// Independent evaluation of the strict recursion written out longhand.
Wide f_wide(int k, const Wide& x)
{
    Wide v = boost::multiprecision::sqrt(x / 2) + boost::multiprecision::pow(x / 2, Wide(0.25)) + Wide(0.5);
    for (int i = 4; i <= k; ++i) {
        v = boost::multiprecision::sqrt(2 * x * v + Wide(0.25)) + Wide(0.5);
    }
    return v;
}

// Maximizes f_5(x) - x/12 by bisecting on the sign of a central difference
// of the derivative (the gap is concave on this range).
Wide g5_gap_max(Wide& argmax)
{
    auto gap = [](const Wide& x) { return f_wide(5, x) - x / 12; };
    Wide lo = 1, hi = 1e14;
    for (int i = 0; i < 400; ++i) {
        const Wide mid = (lo + hi) / 2;
        const Wide h = mid * Wide(1e-20);
        if (gap(mid + h) > gap(mid - h)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    argmax = (lo + hi) / 2;
    return gap(argmax);
}

} // namespace

TEST_CASE("eval_bound examples")
{
    CHECK(eval_bound(3, 2.0, BoundVariant::Strict) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(eval_bound(4, 2.0, BoundVariant::Strict) == doctest::Approx(std::sqrt(10.25) + 0.5).epsilon(1e-14));
    CHECK(eval_bound(4, 2.0, BoundVariant::Strict) == doctest::Approx(3.701562).epsilon(1e-6));
    CHECK(eval_bound(3, 2.0, BoundVariant::Weak) == doctest::Approx(16.0).epsilon(1e-15));
    CHECK_THROWS_AS(eval_bound(2, 2.0, BoundVariant::Strict), Error);
    CHECK_THROWS_AS(eval_bound(3, 0.5, BoundVariant::Strict), Error);
}

TEST_CASE("double evaluation stays within 1e-12 relative per level")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const double x = std::pow(10.0, 12.0 * double(rng() >> 11) * 0x1.0p-53);
        for (int k = 3; k <= 8; ++k) {
            const double got = eval_bound(k, x, BoundVariant::Strict);
            const double want = f_wide(k, Wide(x)).convert_to<double>();
            CHECK(std::abs(got - want) <= 1e-12 * (k - 2) * want);
        }
    }
}

TEST_CASE("variant ordering and growth in k")
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::pow(10.0, 8.0 * double(rng() >> 11) * 0x1.0p-53);
        for (int k = 3; k <= 8; ++k) {
            CHECK(eval_bound(k, x, BoundVariant::Weak) > eval_bound(k, x, BoundVariant::Strict));
            if (x >= 2.0 && k < 8) {
                CHECK(eval_bound(k, x, BoundVariant::Strict) < eval_bound(k + 1, x, BoundVariant::Strict));
            }
        }
    }
}

TEST_CASE("dominance and the g5 constant")
{
    CHECK(check_dominance(g5_query(113'591'719)));
    CHECK_FALSE(check_dominance(g5_query(113'591'718)));
    CHECK(check_dominance(h4_query(3166)));

    const auto C = solve_g5_constant();
    CHECK(C == 113'591'719);
    CHECK(check_dominance(g5_query(C)));
    CHECK_FALSE(check_dominance(g5_query(C - 1)));

    // Independent 50-digit oracle: smallest C with C/2 - 2 > max gap.
    Wide argmax;
    const Wide gap = g5_gap_max(argmax);
    const Wide oracle_c = boost::multiprecision::floor(2 * (gap + 2)) + 1;
    CHECK(oracle_c.convert_to<long long>() == 113'591'719);

    const GapMaximum m = max_gap(g5_query(C));
    CHECK(m.x >= 1e9);
    CHECK(m.x <= 1e10);
    CHECK(std::abs(m.x - argmax.convert_to<double>()) / m.x < 1e-3);
}

TEST_CASE("dominance is monotone in C")
{
    bool seen_true = false;
    for (std::int64_t C = 3100; C <= 3240; C += 7) {
        const bool ok = check_dominance(h4_query(C));
        if (seen_true) {
            CHECK(ok);
        }
        seen_true = seen_true || ok;
    }
    CHECK(seen_true);
}

TEST_CASE("gap function is unimodal on a dense grid over [1, 1e12]")
{
    for (const auto& q : {g5_query(0), h4_query(0)}) {
        const int points = 100'000;
        int direction_changes = 0;
        double previous = 0.0;
        int previous_sign = 1;
        for (int i = 0; i <= points; ++i) {
            const double x = std::pow(10.0, 12.0 * i / points);
            const double gap = eval_bound(q.k, x, q.variant) - double(q.slope.num) / double(q.slope.den) * x;
            if (i > 0) {
                const int sign = gap > previous ? 1 : -1;
                if (sign != previous_sign) {
                    ++direction_changes;
                }
                previous_sign = sign;
            }
            previous = gap;
        }
        CHECK(direction_changes == 1);
    }
}

TEST_CASE("growth properties")
{
    const GrowthReport report = check_growth_properties(8, 10'000, 1);
    CHECK(report.passed());
    CHECK(report.rows.size() == 6);

    const std::vector<double> two{2.0};
    const GrowthReport single = check_growth_properties(3, two);
    CHECK(single.passed());
    CHECK(2.0 * eval_bound(3, 2.0, BoundVariant::Strict) == doctest::Approx(5.0));
    CHECK(eval_bound(3, 4.0, BoundVariant::Strict)
          == doctest::Approx(std::sqrt(2.0) + std::pow(2.0, 0.25) + 0.5).epsilon(1e-14));
    CHECK(eval_bound(3, 4.0, BoundVariant::Strict) == doctest::Approx(3.103).epsilon(1e-3));
    CHECK_THROWS_AS(check_growth_properties(2, 10, 1), Error);
}

TEST_CASE("general upper bound at the bound-function level")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 5000; ++i) {
        const double n = std::pow(10.0, 6.0 + 6.0 * double(rng() >> 11) * 0x1.0p-53);
        for (int k = 3; k <= 8; ++k) {
            const double exponent = 1.0 - std::ldexp(1.0, -(k - 2));
            CHECK(eval_bound(k, 2.0 * n, BoundVariant::Strict) < 4.0 * std::pow(n, exponent));
        }
    }
}
