#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library search paths they check.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline bool all_sums_in(const std::set<Int>& a, const std::vector<Int>& b)
{
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!a.contains(b[i] + b[j])) {
                return false;
            }
        }
    }
    return true;
}

// Visits increasing k-tuples from [lo, hi] in lexicographic order whose
// partial pairwise sums all lie in `a`; stops when visit returns false.
inline void tuples(const std::set<Int>& a, int k, Int lo, Int hi,
                   const std::function<bool(const std::vector<Int>&)>& visit)
{
    std::vector<Int> cur;
    std::function<bool(Int)> rec = [&](Int start) -> bool {
        if (static_cast<int>(cur.size()) == k) {
            return visit(cur);
        }
        for (Int v = start; v <= hi; ++v) {
            bool ok = true;
            for (Int c : cur) {
                ok = ok && a.contains(c + v);
            }
            if (!ok) {
                continue;
            }
            cur.push_back(v);
            const bool more = rec(v + 1);
            cur.pop_back();
            if (!more) {
                return false;
            }
        }
        return true;
    };
    rec(lo);
}

// Lexicographically first witness over [-4n, 4n] (h-mode: [1, 4n]).
inline std::optional<std::vector<Int>> first_witness(const std::set<Int>& a, Int n, int k, bool positive)
{
    std::optional<std::vector<Int>> out;
    tuples(a, k, positive ? 1 : -4 * n, 4 * n, [&](const std::vector<Int>& t) {
        out = t;
        return false;
    });
    return out;
}

inline std::set<Int> from_mask(std::uint64_t mask)
{
    std::set<Int> s;
    for (Int e = 1; mask != 0; ++e, mask >>= 1) {
        if (mask & 1U) {
            s.insert(e);
        }
    }
    return s;
}

inline bool is_sidon(const std::vector<Int>& s)
{
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            for (std::size_t c = 0; c < s.size(); ++c)
                for (std::size_t d = c + 1; d < s.size(); ++d)
                    if ((a != c || b != d) && s[b] - s[a] == s[d] - s[c])
                        return false;
    return true;
}

inline bool is_weak_sidon(const std::vector<Int>& s)
{
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            for (std::size_t c = b + 1; c < s.size(); ++c)
                for (std::size_t d = c + 1; d < s.size(); ++d)
                    if (s[a] + s[d] == s[b] + s[c])
                        return false;
    return true;
}

} // namespace oracle
