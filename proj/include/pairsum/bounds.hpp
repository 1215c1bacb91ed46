#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pairsum/core.hpp"

namespace pairsum {

// Strict uses the Sidon base sqrt(x/2) + (x/2)^(1/4) + 1/2, weak the
// weak-Sidon base sqrt(x/2) + 4(x/2)^(1/4) + 11.
enum class BoundVariant { Strict, Weak };

std::string_view to_string(BoundVariant variant);
std::optional<BoundVariant> parse_bound_variant(std::string_view text);

struct BaseConstants {
    double quarter_coefficient;
    double additive;
};
BaseConstants base_constants(BoundVariant variant);

/// f_k / F_k for an arbitrary floating type. No domain checks.
template <class Real>
Real bound_value(int k, const Real& x, BoundVariant variant)
{
    using std::pow;
    using std::sqrt;
    const BaseConstants base = base_constants(variant);
    const Real half = x / 2;
    Real value = sqrt(half) + Real(base.quarter_coefficient) * sqrt(sqrt(half)) + Real(base.additive);
    for (int level = 4; level <= k; ++level) {
        value = sqrt(2 * x * value + Real(1) / 4) + Real(1) / 2;
    }
    return value;
}

/// f_k(x) (strict) or F_k(x) (weak); throws DomainError for k < 3 or x < 1.
double eval_bound(int k, double x, BoundVariant variant);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Is slope * x + (offset_coeff * C + offset_const) > bound_k(x) for every x >= 1?
struct DominanceQuery {
    Rational slope;
    Rational offset_coeff;
    Rational offset_const;
    int k = 5;
    BoundVariant variant = BoundVariant::Strict;
    std::int64_t C = 0;
};

/// x/12 + C/2 - 2 against f_5.
DominanceQuery g5_query(std::int64_t C);
/// (x - 6)/16 + C/2 against F_4.
DominanceQuery h4_query(std::int64_t C);

struct GapMaximum {
    double x;   // maximizer of bound(x) - slope * x on [1, 1e14]
    double gap; // bound(x) - slope * x at the maximizer
};

/// Ternary search for the maximum of bound(x) - slope * x (unimodal).
GapMaximum max_gap(const DominanceQuery& query);

/// Throws PrecisionIndeterminate if the margin stays below 1e-6 even in
/// 50-digit arithmetic.
bool check_dominance(const DominanceQuery& query);

/// Smallest C with check_dominance(g5_query(C)), by bisection on [1, 2e8].
std::int64_t solve_g5_constant();

/// Footnote envelope 2^(1 - 3/2^(k-2)) x^(1 - 1/2^(k-2)) + 2 x^(1 - 3/2^(k-1)).
double growth_envelope(int k, double x);

struct GrowthRow {
    int k = 0;
    std::size_t samples = 0;
    std::size_t sublinear_failures = 0;  // 2 f_k(x) > f_k(2x) violated
    std::size_t envelope_failures = 0;   // f_k(x) <= envelope violated
    std::size_t monotone_failures = 0;   // f_k increasing on sorted samples violated
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool passed() const;
};

/// Samples x log-uniformly in [1, 1e6] with the given seed.
GrowthReport check_growth_properties(int k_max, std::size_t sample_count, std::uint64_t seed);

/// Same checks on explicit sample points.
GrowthReport check_growth_properties(int k_max, std::span<const double> xs);

} // namespace pairsum
