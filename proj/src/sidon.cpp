#include "pairsum/sidon.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace pairsum {

namespace {

// Dense membership over [lo, hi] of a sorted set.
class Membership {
public:
    explicit Membership(std::span<const Int> set)
    {
        if (set.empty()) {
            return;
        }
        lo_ = set.front();
        bits_.assign(static_cast<std::size_t>(set.back() - lo_ + 1), false);
        for (Int v : set) {
            bits_[static_cast<std::size_t>(v - lo_)] = true;
        }
    }

    bool contains(Int v) const
    {
        const Int i = v - lo_;
        return i >= 0 && i < static_cast<Int>(bits_.size()) && bits_[static_cast<std::size_t>(i)];
    }

private:
    Int lo_ = 0;
    std::vector<bool> bits_;
};

bool is_prime(Int p)
{
    if (p < 2) {
        return false;
    }
    for (Int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<Int> greedy_sidon(Int limit)
{
    std::vector<Int> set;
    std::vector<bool> used_difference(static_cast<std::size_t>(limit), false);
    std::vector<Int> fresh;
    for (Int candidate = 1; candidate <= limit; ++candidate) {
        fresh.clear();
        bool ok = true;
        for (Int a : set) {
            const Int d = candidate - a;
            if (used_difference[static_cast<std::size_t>(d)] || std::find(fresh.begin(), fresh.end(), d) != fresh.end()) {
                ok = false;
                break;
            }
            fresh.push_back(d);
        }
        if (ok) {
            for (Int d : fresh) {
                used_difference[static_cast<std::size_t>(d)] = true;
            }
            set.push_back(candidate);
        }
    }
    return set;
}

} // namespace

bool is_sidon(std::span<const Int> set)
{
    if (set.size() < 3) {
        return true;
    }
    std::unordered_set<Int> seen;
    seen.reserve(set.size() * set.size());
    for (std::size_t j = 1; j < set.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!seen.insert(set[j] - set[i]).second) {
                return false;
            }
        }
    }
    return true;
}

bool is_weak_sidon(std::span<const Int> set)
{
    // Two pairs with the same sum are automatically disjoint, so a repeated
    // pair sum is exactly a quadruple a1 + a4 = a2 + a3.
    if (set.size() < 4) {
        return true;
    }
    std::unordered_set<Int> seen;
    seen.reserve(set.size() * set.size());
    for (std::size_t j = 1; j < set.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!seen.insert(set[i] + set[j]).second) {
                return false;
            }
        }
    }
    return true;
}

std::string_view to_string(SidonMethod method)
{
    return method == SidonMethod::Greedy ? "greedy" : "modular";
}

std::optional<SidonMethod> parse_sidon_method(std::string_view text)
{
    if (text == "greedy") {
        return SidonMethod::Greedy;
    }
    if (text == "modular") {
        return SidonMethod::Modular;
    }
    return std::nullopt;
}

std::vector<Int> build_sidon(Int limit, SidonMethod method)
{
    if (limit < 1) {
        throw Error(ErrorKind::InvalidInput, "limit must be positive");
    }
    if (method == SidonMethod::Greedy) {
        return greedy_sidon(limit);
    }
    Int p = 0;
    for (Int q = 2; 2 * q * q <= limit; ++q) {
        if (is_prime(q)) {
            p = q;
        }
    }
    if (p == 0) {
        return greedy_sidon(limit);
    }
    std::vector<Int> set;
    set.reserve(static_cast<std::size_t>(p));
    for (Int i = 0; i < p; ++i) {
        const Int value = 2 * p * i + (i * i) % p + 1;
        if (value <= limit) {
            set.push_back(value);
        }
    }
    std::sort(set.begin(), set.end());
    return set;
}

std::vector<Int> DifferenceFamily::starts() const
{
    std::vector<Int> out;
    out.reserve(pairs.size());
    for (const auto& [s, e] : pairs) {
        out.push_back(s);
    }
    return out;
}

std::vector<Int> DifferenceFamily::ends() const
{
    std::vector<Int> out;
    out.reserve(pairs.size());
    for (const auto& [s, e] : pairs) {
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

DifferenceFamily chain_matching(std::span<const Int> set, const Membership& member, Int m)
{
    DifferenceFamily family{m, {}};
    for (Int x : set) {
        if (member.contains(x - m)) {
            continue; // not a chain head
        }
        Int a = x;
        while (member.contains(a) && member.contains(a + m)) {
            family.pairs.emplace_back(a, a + m);
            a += 2 * m;
        }
    }
    std::sort(family.pairs.begin(), family.pairs.end());
    return family;
}

} // namespace

DifferenceFamily disjoint_representations(std::span<const Int> set, Int m)
{
    if (m <= 0) {
        throw Error(ErrorKind::InvalidInput, "difference must be positive");
    }
    return chain_matching(set, Membership(set), m);
}

DifferenceFamily max_disjoint_representations(std::span<const Int> evens)
{
    if (evens.size() < 2) {
        throw Error(ErrorKind::DegenerateInput, "need at least two elements");
    }
    for (Int v : evens) {
        if (v % 2 != 0) {
            throw Error(ErrorKind::InvalidInput, "element " + std::to_string(v) + " is odd");
        }
    }
    const Membership member(evens);
    const Int span = evens.back() - evens.front();
    DifferenceFamily best;
    for (Int m = 2; m <= span; m += 2) {
        // A family for m can have at most floor(r / 2) pairs.
        if (best.size() >= evens.size() / 2) {
            break;
        }
        DifferenceFamily family = chain_matching(evens, member, m);
        if (family.size() > best.size()) {
            best = std::move(family);
        }
    }
    return best;
}

} // namespace pairsum
