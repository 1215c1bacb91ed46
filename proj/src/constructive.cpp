#include "pairsum/constructive.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pairsum/sidon.hpp"

namespace pairsum {

namespace {

using nlohmann::json;

void require(bool ok, ErrorKind kind, const std::string& message)
{
    if (!ok) {
        throw Error(kind, message);
    }
}

bool all_sums_in(const SumSet& set, std::span<const Int> values)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (!set.contains(values[i] + values[j])) {
                return false;
            }
        }
    }
    return true;
}

Construction finish(const SumSet& set, std::vector<Int> values, Mode mode, json trace)
{
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end() || !all_sums_in(set, values)) {
        throw std::logic_error("builder produced an invalid witness: " + json(values).dump());
    }
    return {Witness::make(std::move(values), mode), std::move(trace)};
}

// The three half-sums with pairwise sums x1, x2, x3 (all even).
std::array<Int, 3> half_sums(Int x1, Int x2, Int x3)
{
    return {(x1 + x2 - x3) / 2, (x1 + x3 - x2) / 2, (x2 + x3 - x1) / 2};
}

std::vector<Int> evens_in(const SumSet& set, Int lo, Int hi)
{
    std::vector<Int> out;
    for (Int v = std::max<Int>(2, lo + (lo & 1)); v <= std::min(hi, set.ground()); v += 2) {
        if (set.contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

void require_hypothesis_size(const SumSet& set, Int excess)
{
    if (static_cast<Int>(set.size()) < set.n() + excess) {
        throw Error(ErrorKind::HypothesisViolation,
                    "|A| = " + std::to_string(set.size()) + " is below n + " + std::to_string(excess) + " = "
                        + std::to_string(set.n() + excess));
    }
}

// Minimal non-negative triples for every A within {1..6} with |A| >= 4,
// keyed by membership mask (bit e-1 for e). Checked exhaustively by the tests.
struct BaseEntry {
    std::uint64_t mask;
    std::array<Int, 3> values;
};
constexpr std::array<BaseEntry, 22> kNonnegBase{{
    {0x0f, {0, 1, 2}}, {0x17, {0, 1, 2}}, {0x1b, {0, 1, 4}}, {0x1d, {0, 1, 3}}, {0x1e, {0, 2, 3}},
    {0x1f, {0, 1, 2}}, {0x27, {0, 1, 2}}, {0x2b, {0, 2, 4}}, {0x2d, {0, 1, 3}}, {0x2e, {0, 2, 4}},
    {0x2f, {0, 1, 2}}, {0x33, {0, 1, 5}}, {0x35, {0, 1, 5}}, {0x36, {0, 2, 3}}, {0x37, {0, 1, 2}},
    {0x39, {0, 1, 4}}, {0x3a, {0, 2, 4}}, {0x3b, {0, 1, 4}}, {0x3c, {1, 2, 3}}, {0x3d, {0, 1, 3}},
    {0x3e, {0, 2, 3}}, {0x3f, {0, 1, 2}},
}};

} // namespace

// ---------------------------------------------------------------------------

Construction construct_g3(const SumSet& set)
{
    const Int n = set.n();
    require(n >= 3, ErrorKind::HypothesisViolation, "construct_g3 needs n >= 3");
    require_hypothesis_size(set, 1);

    Int m = 1;
    while (!(set.contains(m) && set.contains(m + 1))) {
        m += 2;
    }
    json trace = {{"builder", "g3"}, {"m", m}};

    Int other_odd = 0;
    for (Int v = 1; v < 2 * n; v += 2) {
        if (v != m && set.contains(v)) {
            other_odd = v;
            break;
        }
    }
    if (other_odd == 0) {
        trace["case"] = "all-even";
        return finish(set, {0, 2, 4}, Mode::G, std::move(trace));
    }
    const Int j = (other_odd - 1) / 2;
    trace["case"] = "odd";
    trace["j"] = j;
    return finish(set, {j, j + 1, m - j}, Mode::G, std::move(trace));
}

Construction construct_g3_nonneg(const SumSet& set)
{
    require(set.n() >= 3, ErrorKind::HypothesisViolation, "construct_g3_nonneg needs n >= 3");
    require_hypothesis_size(set, 1);

    // Shift {a - 2} \ {0} while 1 is missing; each shift keeps |A| >= n + 1.
    SumSet current = set;
    Int shifts = 0;
    while (current.n() > 3 && !current.contains(1)) {
        SumSet shifted(current.n() - 1);
        for (Int a : current.members()) {
            if (a > 2) {
                shifted.insert(a - 2);
            }
        }
        current = std::move(shifted);
        ++shifts;
    }

    json trace = {{"builder", "g3_nonneg"}, {"shifts", shifts}};
    std::vector<Int> values;
    if (current.n() == 3) {
        const auto mask = current.mask();
        const auto it = std::find_if(kNonnegBase.begin(), kNonnegBase.end(),
                                     [&](const BaseEntry& e) { return e.mask == mask; });
        if (it == kNonnegBase.end()) {
            throw std::logic_error("n = 3 base table misses a qualifying set");
        }
        trace["case"] = "base-table";
        values.assign(it->values.begin(), it->values.end());
    } else {
        Int m = 2;
        while (m < current.ground() && !(current.contains(m) && current.contains(m + 1))) {
            ++m;
        }
        if (m < current.ground()) {
            trace["case"] = "consecutive";
            trace["m"] = m;
            values = {0, 1, m};
        } else {
            trace["case"] = "one-plus-evens";
            values = {0, 2, 4};
        }
    }
    for (auto& v : values) {
        v += shifts;
    }
    return finish(set, std::move(values), Mode::G, std::move(trace));
}

Construction construct_g4(const SumSet& set)
{
    const Int n = set.n();
    require(n >= 3, ErrorKind::HypothesisViolation, "construct_g4 needs n >= 3 (the n = 2 case is vacuous)");
    require_hypothesis_size(set, 3);

    std::vector<Int> a;
    for (Int v = 2; v <= 2 * n && a.size() < 3; v += 2) {
        if (set.contains(v) && set.contains(2 * n + 1 - v)) {
            a.push_back(v);
        }
    }
    if (a.size() < 3) {
        throw std::logic_error("pigeonhole failed for construct_g4");
    }
    const auto b = half_sums(a[0], a[1], a[2]);
    const Int b4 = (4 * n + 2 - a[0] - a[1] - a[2]) / 2;
    json trace = {{"builder", "g4"}, {"a", a}};
    return finish(set, {b[0], b[1], b[2], b4}, Mode::G, std::move(trace));
}

Construction construct_g5_allodds(const SumSet& set)
{
    const Int n = set.n();
    for (Int v = 1; v < 2 * n; v += 2) {
        require(set.contains(v), ErrorKind::HypothesisViolation,
                "construct_g5_allodds needs every odd number; " + std::to_string(v) + " is missing");
    }
    require_hypothesis_size(set, 4);

    const auto evens = set.evens();
    const Int a1 = evens[0];
    const Int a2 = evens[1];
    const Int a3 = evens[2];
    const Int a4 = evens[3];
    json trace = {{"builder", "g5_allodds"}, {"a", {a1, a2, a3, a4}}};

    std::vector<Int> values;
    if (a2 + a3 <= 2 * n) {
        const auto b = half_sums(a1, a2, a3);
        const Int b4 = 1 - b[0];
        values = {b[0], b[1], b[2], b4, a3 - b4};
        trace["case"] = 1;
    } else {
        const auto b = half_sums(a2, a3, a4);
        const Int b4 = (a3 < 2 * n - 2 ? a2 : a1) + b[2] - (2 * n - 1);
        values = {b[0], b[1], b[2], b4, (2 * n - 1) - b[2]};
        trace["case"] = a3 < 2 * n - 2 ? 2 : 3;
    }
    return finish(set, std::move(values), Mode::G, std::move(trace));
}

// ---------------------------------------------------------------------------
// Even-set recursion

namespace {

EvenChainSelection strict_base(std::span<const Int> evens)
{
    const std::vector<Int> subject(evens.begin(), evens.end());
    if (evens.size() >= 2) {
        const DifferenceFamily family = max_disjoint_representations(evens);
        if (family.size() >= 2) {
            const auto [i1, j1] = family.pairs[0];
            const auto [i2, j2] = family.pairs[1];
            return {{{family.m, {i1, i2}, {j1, j2}}}, {i2, i1 - i2, family.m}};
        }
        // No two disjoint representations: look for x, x + m, x + 2m.
        std::vector<bool> member(static_cast<std::size_t>(evens.back() + 1), false);
        for (Int v : evens) {
            member[static_cast<std::size_t>(v)] = true;
        }
        const Int span = evens.back() - evens.front();
        for (Int m = 2; 2 * m <= span; m += 2) {
            for (Int x : evens) {
                if (x + 2 * m > evens.back()) {
                    break;
                }
                if (member[static_cast<std::size_t>(x + m)] && member[static_cast<std::size_t>(x + 2 * m)]) {
                    return {{{m, {x, x + m}, {x + m, x + 2 * m}}}, {x + m, -m, m}};
                }
            }
        }
    }
    throw Error(ErrorKind::StructureNotFound, "no repeated difference: the half-set is a Sidon set", subject);
}

EvenChainSelection weak_base(std::span<const Int> evens)
{
    const std::vector<Int> subject(evens.begin(), evens.end());
    if (evens.size() >= 4) {
        std::vector<bool> member(static_cast<std::size_t>(evens.back() + 1), false);
        for (Int v : evens) {
            member[static_cast<std::size_t>(v)] = true;
        }
        const std::size_t r = evens.size();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                for (std::size_t l = j + 1; l < r; ++l) {
                    const Int a4 = evens[j] + evens[l] - evens[i];
                    if (a4 <= evens.back() && member[static_cast<std::size_t>(a4)]) {
                        const Int a1 = evens[i];
                        const Int a2 = evens[j];
                        const Int a3 = evens[l];
                        return {{{a2 - a1, {a1, a3}, {a2, a4}}}, {a1, a2 - a1, a3 - a1}};
                    }
                }
            }
        }
    }
    throw Error(ErrorKind::StructureNotFound, "no equal-sum quadruple: the half-set is weak Sidon", subject);
}

EvenChainSelection chain(std::span<const Int> evens, int k, BoundVariant variant)
{
    if (k == 3) {
        return variant == BoundVariant::Strict ? strict_base(evens) : weak_base(evens);
    }
    if (evens.size() < 2) {
        throw Error(ErrorKind::StructureNotFound, "fewer than two elements left for the recursion",
                    std::vector<Int>(evens.begin(), evens.end()));
    }
    const DifferenceFamily family = max_disjoint_representations(evens);
    const std::vector<Int> starts = family.starts();
    EvenChainSelection inner = chain(starts, k - 1, variant);

    // S and T are disjoint, so m differs from every earlier c_i (i >= 2).
    if (std::find(inner.c.begin() + 1, inner.c.end(), family.m) != inner.c.end()) {
        throw std::logic_error("even-set recursion produced a repeated difference");
    }
    EvenChainSelection out;
    out.levels.push_back({family.m, starts, family.ends()});
    out.levels.insert(out.levels.end(), inner.levels.begin(), inner.levels.end());
    out.c = std::move(inner.c);
    out.c.push_back(family.m);
    return out;
}

} // namespace

EvenChainSelection even_lemma_chain(std::span<const Int> evens, int k, BoundVariant variant)
{
    require(k >= 3, ErrorKind::PreconditionViolation, "k must be at least 3");
    require(!evens.empty(), ErrorKind::PreconditionViolation, "the even set is empty");
    for (std::size_t i = 0; i < evens.size(); ++i) {
        require(evens[i] >= 2 && evens[i] % 2 == 0, ErrorKind::PreconditionViolation,
                "element " + std::to_string(evens[i]) + " is not a positive even integer");
        require(i == 0 || evens[i - 1] < evens[i], ErrorKind::PreconditionViolation,
                "the even set must be strictly increasing");
    }
    return chain(evens, k, variant);
}

Construction construct_even_lemma(std::span<const Int> evens, int k, BoundVariant variant)
{
    const EvenChainSelection selection = even_lemma_chain(evens, k, variant);
    const Int half = selection.c.front() / 2;
    std::vector<Int> values{half};
    for (std::size_t i = 1; i < selection.c.size(); ++i) {
        values.push_back(half + selection.c[i]);
    }

    json levels = json::array();
    for (const auto& level : selection.levels) {
        levels.push_back({{"m", level.m}, {"starts", level.starts}, {"ends", level.ends}});
    }
    json trace = {{"builder", "even_lemma"},
                  {"variant", to_string(variant)},
                  {"k", k},
                  {"c", selection.c},
                  {"levels", std::move(levels)}};
    const SumSet host = SumSet::from_members(evens.back() / 2, evens);
    return finish(host, std::move(values), variant == BoundVariant::Weak ? Mode::H : Mode::G, std::move(trace));
}

// ---------------------------------------------------------------------------
// Builders with a parameterized constant

namespace {

Construction lemma_on_interval(const SumSet& set, std::vector<Int> evens, int k, BoundVariant variant,
                               json trace, const char* branch)
{
    try {
        Construction inner = construct_even_lemma(evens, k, variant);
        trace["lemma"] = std::move(inner.trace);
        return finish(set, inner.witness.values, inner.witness.mode, std::move(trace));
    } catch (const Error& e) {
        throw Error(ErrorKind::BranchGuaranteeFailed, std::string(branch) + ": " + e.what(), e.subject());
    }
}

} // namespace

Construction construct_g5_bounded(const SumSet& set, Int C)
{
    const Int n = set.n();
    require(C >= 1, ErrorKind::InvalidInput, "C must be positive");
    require_hypothesis_size(set, C);

    const std::vector<Int> evens = set.evens();
    const Int t = static_cast<Int>(evens.size()) - C; // |A| >= n + C forces t >= 0
    json trace = {{"builder", "g5_bounded"}, {"C", C}, {"t", t}, {"evens", evens.size()}};

    if (6 * t >= n) {
        trace["branch"] = "i";
        return lemma_on_interval(set, evens, 5, BoundVariant::Strict, std::move(trace), "branch i");
    }

    const std::vector<Int> middle = evens_in(set, 6 * t + 2, 2 * n - 6 * t - 2);
    if (middle.size() <= 4) {
        std::vector<Int> left = evens_in(set, 2, 6 * t);
        std::vector<Int> right = evens_in(set, 2 * n - 6 * t, 2 * n);
        const bool use_left = left.size() >= right.size();
        trace["branch"] = "ii";
        trace["side"] = use_left ? "left" : "right";
        return lemma_on_interval(set, use_left ? std::move(left) : std::move(right), 5, BoundVariant::Strict,
                                 std::move(trace), "branch ii");
    }

    trace["branch"] = "iii";
    std::vector<Int> window = evens_in(set, 6 * t + 2, n);
    Int pair_sum = 0;
    if (window.size() >= 3) {
        trace["side"] = "left";
        window.resize(3);
        pair_sum = window[2];
    } else {
        window = evens_in(set, n, 2 * n - 6 * t - 2);
        trace["side"] = "right";
        window.resize(3);
        pair_sum = window[0];
    }
    trace["a"] = window;
    const auto b = half_sums(window[0], window[1], window[2]);

    const Int centre = pair_sum / 2;
    for (Int p = centre - 6 * t - 2; p < centre; ++p) {
        const Int q = pair_sum - p;
        if (((p - b[0]) & 1) == 0 || q > centre + 6 * t + 2) {
            continue;
        }
        bool ok = true;
        for (Int bi : b) {
            ok = ok && set.contains(bi + p) && set.contains(bi + q);
        }
        if (ok) {
            trace["pair"] = {p, q};
            return finish(set, {b[0], b[1], b[2], p, q}, Mode::G, std::move(trace));
        }
    }
    throw Error(ErrorKind::BranchGuaranteeFailed,
                "branch iii: no pair (p, q) with p + q = " + std::to_string(pair_sum) + " has all cross sums in A");
}

Construction construct_h4_bounded(const SumSet& set, Int C)
{
    const Int n = set.n();
    require(C >= 1, ErrorKind::InvalidInput, "C must be positive");
    require_hypothesis_size(set, C);

    const std::vector<Int> evens = set.evens();
    const Int t = static_cast<Int>(evens.size()) - C;
    json trace = {{"builder", "h4_bounded"}, {"C", C}, {"t", t}, {"evens", evens.size()}};

    const std::vector<Int> middle = evens_in(set, 8 * t + 6, 2 * n - 8 * t - 6);
    if (!middle.empty()) {
        const Int m = middle.front() / 2;
        trace["branch"] = "pair";
        trace["two_m"] = 2 * m;
        for (Int b3 = std::max<Int>(m - 4 * t - 2, 1); b3 <= m - 2; ++b3) {
            if (((b3 - m) & 1) != 0) {
                continue;
            }
            const Int b4 = 2 * m - b3;
            if (set.contains(m - 1 + b3) && set.contains(m - 1 + b4) && set.contains(m + 1 + b3)
                && set.contains(m + 1 + b4)) {
                return finish(set, {m - 1, m + 1, b3, b4}, Mode::H, std::move(trace));
            }
        }
        throw Error(ErrorKind::BranchGuaranteeFailed,
                    "pair branch: no b3 in [" + std::to_string(m - 4 * t - 2) + ", " + std::to_string(m - 2)
                        + "] has all four cross sums in A");
    }

    std::vector<Int> left = evens_in(set, 2, 8 * t + 4);
    std::vector<Int> right = evens_in(set, 2 * n - 8 * t - 4, 2 * n);
    const bool use_left = left.size() >= right.size();
    trace["branch"] = "weak-lemma";
    trace["side"] = use_left ? "left" : "right";
    return lemma_on_interval(set, use_left ? std::move(left) : std::move(right), 4, BoundVariant::Weak,
                             std::move(trace), "weak-lemma branch");
}

} // namespace pairsum
