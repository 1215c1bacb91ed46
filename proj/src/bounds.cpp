#include "pairsum/bounds.hpp"

#include <algorithm>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace pairsum {

namespace {

using Extended = boost::multiprecision::cpp_bin_float_50;

constexpr double kSearchLo = 1.0;
constexpr double kSearchHi = 1e14;
constexpr double kXPrecision = 1e-3;
constexpr double kMargin = 1e-6;
constexpr double kExtendedMargin = 1e-20;

template <class Real>
Real to_real(const Rational& r)
{
    return Real(r.num) / Real(r.den);
}

template <class Real>
Real gap_at(const DominanceQuery& q, const Real& x)
{
    return bound_value<Real>(q.k, x, q.variant) - to_real<Real>(q.slope) * x;
}

template <class Real>
std::pair<Real, Real> ternary_max(const DominanceQuery& q)
{
    Real lo(kSearchLo);
    Real hi(kSearchHi);
    while (hi - lo > Real(kXPrecision)) {
        const Real third = (hi - lo) / 3;
        const Real m1 = lo + third;
        const Real m2 = hi - third;
        if (gap_at(q, m1) < gap_at(q, m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    const Real x = (lo + hi) / 2;
    return {x, gap_at(q, x)};
}

template <class Real>
Real offset(const DominanceQuery& q)
{
    return to_real<Real>(q.offset_coeff) * Real(q.C) + to_real<Real>(q.offset_const);
}

void validate(const DominanceQuery& q)
{
    if (q.slope.den <= 0 || q.offset_coeff.den <= 0 || q.offset_const.den <= 0) {
        throw Error(ErrorKind::InvalidInput, "rational denominators must be positive");
    }
    if (q.slope.num <= 0) {
        throw Error(ErrorKind::InvalidInput, "slope must be positive");
    }
    if (q.k < 3) {
        throw Error(ErrorKind::DomainError, "k must be at least 3");
    }
}

} // namespace

std::string_view to_string(BoundVariant variant)
{
    return variant == BoundVariant::Strict ? "strict" : "weak";
}

std::optional<BoundVariant> parse_bound_variant(std::string_view text)
{
    if (text == "strict") {
        return BoundVariant::Strict;
    }
    if (text == "weak") {
        return BoundVariant::Weak;
    }
    return std::nullopt;
}

BaseConstants base_constants(BoundVariant variant)
{
    if (variant == BoundVariant::Strict) {
        return {1.0, 0.5};
    }
    return {4.0, 11.0};
}

double eval_bound(int k, double x, BoundVariant variant)
{
    if (k < 3) {
        throw Error(ErrorKind::DomainError, "k must be at least 3, got " + std::to_string(k));
    }
    if (!(x >= 1.0)) {
        throw Error(ErrorKind::DomainError, "x must be at least 1");
    }
    return bound_value<double>(k, x, variant);
}

DominanceQuery g5_query(std::int64_t C)
{
    return {{1, 12}, {1, 2}, {-2, 1}, 5, BoundVariant::Strict, C};
}

DominanceQuery h4_query(std::int64_t C)
{
    return {{1, 16}, {1, 2}, {-6, 16}, 4, BoundVariant::Weak, C};
}

GapMaximum max_gap(const DominanceQuery& query)
{
    validate(query);
    const auto [x, gap] = ternary_max<double>(query);
    return {x, gap};
}

bool check_dominance(const DominanceQuery& query)
{
    validate(query);
    const auto [x, gap] = ternary_max<double>(query);
    const double diff = offset<double>(query) - gap;
    if (diff > kMargin) {
        return true;
    }
    if (diff < -kMargin) {
        return false;
    }

    const auto [xe, gape] = ternary_max<Extended>(query);
    const Extended diffe = offset<Extended>(query) - gape;
    if (diffe > Extended(kExtendedMargin)) {
        return true;
    }
    if (diffe < Extended(-kExtendedMargin)) {
        return false;
    }
    throw Error(ErrorKind::PrecisionIndeterminate,
                "dominance margin below 1e-20 at C = " + std::to_string(query.C));
}

std::int64_t solve_g5_constant()
{
    std::int64_t lo = 1;
    std::int64_t hi = 200'000'000;
    if (!check_dominance(g5_query(hi))) {
        throw Error(ErrorKind::DomainError, "no dominating constant in [1, 2e8]");
    }
    // Invariant: check(hi) holds; check(lo - 1) is not known to hold.
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (check_dominance(g5_query(mid))) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

double growth_envelope(int k, double x)
{
    const double p = std::ldexp(1.0, -(k - 2)); // 1 / 2^(k-2)
    return std::pow(2.0, 1.0 - 3.0 * p) * std::pow(x, 1.0 - p) + 2.0 * std::pow(x, 1.0 - 1.5 * p);
}

bool GrowthReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const GrowthRow& r) {
        return r.sublinear_failures == 0 && r.envelope_failures == 0 && r.monotone_failures == 0;
    });
}

GrowthReport check_growth_properties(int k_max, std::span<const double> xs)
{
    if (k_max < 3) {
        throw Error(ErrorKind::DomainError, "k_max must be at least 3");
    }
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    GrowthReport report;
    for (int k = 3; k <= k_max; ++k) {
        GrowthRow row;
        row.k = k;
        row.samples = sorted.size();
        double previous_x = 0.0;
        double previous_f = 0.0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const double x = sorted[i];
            const double fx = eval_bound(k, x, BoundVariant::Strict);
            if (!(2.0 * fx > eval_bound(k, 2.0 * x, BoundVariant::Strict))) {
                ++row.sublinear_failures;
            }
            if (!(fx <= growth_envelope(k, x))) {
                ++row.envelope_failures;
            }
            if (i > 0 && x > previous_x && !(fx > previous_f)) {
                ++row.monotone_failures;
            }
            previous_x = x;
            previous_f = fx;
        }
        report.rows.push_back(row);
    }
    return report;
}

GrowthReport check_growth_properties(int k_max, std::size_t sample_count, std::uint64_t seed)
{
    if (sample_count < 1) {
        throw Error(ErrorKind::DomainError, "sample_count must be positive");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> xs(sample_count);
    for (auto& x : xs) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        x = std::pow(10.0, 6.0 * u);
    }
    return check_growth_properties(k_max, xs);
}

} // namespace pairsum
