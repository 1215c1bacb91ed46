#include "pairsum/core.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

namespace pairsum {

std::string_view to_string(Mode mode)
{
    return mode == Mode::G ? "g" : "h";
}

std::optional<Mode> parse_mode(std::string_view text)
{
    if (text == "g" || text == "g-mode") {
        return Mode::G;
    }
    if (text == "h" || text == "h-mode") {
        return Mode::H;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SumSet

SumSet::SumSet(Int n) : n_(n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidInput, "n must be positive, got " + std::to_string(n));
    }
    words_.assign(static_cast<std::size_t>((2 * n + 63) / 64), 0);
}

SumSet SumSet::from_members(Int n, std::span<const Int> members)
{
    SumSet set(n);
    for (Int v : members) {
        set.insert(v);
    }
    return set;
}

SumSet SumSet::full(Int n)
{
    SumSet set(n);
    for (Int v = 1; v <= 2 * n; ++v) {
        set.insert(v);
    }
    return set;
}

SumSet SumSet::odds(Int n)
{
    SumSet set(n);
    for (Int v = 1; v <= 2 * n; v += 2) {
        set.insert(v);
    }
    return set;
}

std::size_t SumSet::size() const noexcept
{
    std::size_t count = 0;
    for (auto w : words_) {
        count += static_cast<std::size_t>(std::popcount(w));
    }
    return count;
}

void SumSet::insert(Int value)
{
    if (value < 1 || value > 2 * n_) {
        throw Error(ErrorKind::InvalidInput, "member " + std::to_string(value) + " outside [1, "
                                                 + std::to_string(2 * n_) + "]");
    }
    const auto bit = static_cast<std::uint64_t>(value - 1);
    words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
}

void SumSet::erase(Int value)
{
    if (value < 1 || value > 2 * n_) {
        return;
    }
    const auto bit = static_cast<std::uint64_t>(value - 1);
    words_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
}

std::vector<Int> SumSet::members() const
{
    std::vector<Int> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto word = words_[w];
        while (word != 0) {
            const int b = std::countr_zero(word);
            out.push_back(static_cast<Int>(w * 64 + static_cast<std::size_t>(b)) + 1);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<Int> SumSet::evens() const
{
    std::vector<Int> out;
    for (Int v = 2; v <= 2 * n_; v += 2) {
        if (contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

std::uint64_t SumSet::mask() const
{
    if (2 * n_ > 64) {
        throw Error(ErrorKind::OutOfRange, "mask() requires 2n <= 64");
    }
    return words_.front();
}

SumSet SumSet::from_mask(Int n, std::uint64_t mask)
{
    SumSet set(n);
    if (2 * n > 64) {
        throw Error(ErrorKind::OutOfRange, "from_mask() requires 2n <= 64");
    }
    if (2 * n < 64 && (mask >> (2 * n)) != 0) {
        throw Error(ErrorKind::InvalidInput, "mask has bits beyond 2n");
    }
    set.words_.front() = mask;
    return set;
}

// ---------------------------------------------------------------------------
// Witness

Witness Witness::make(std::vector<Int> values, Mode mode)
{
    if (values.size() < 3) {
        throw Error(ErrorKind::InvalidArity, "a witness needs at least three values");
    }
    if (std::adjacent_find(values.begin(), values.end(), std::greater_equal<>()) != values.end()) {
        throw Error(ErrorKind::InvalidInput, "witness values must be strictly increasing");
    }
    if (mode == Mode::H && values.front() < 1) {
        throw Error(ErrorKind::InvalidInput, "h-mode witness values must be positive");
    }
    if (mode == Mode::G && values.size() >= 2 && values[1] <= 0) {
        throw Error(ErrorKind::InvalidInput, "at most one witness value may be non-positive");
    }
    return Witness{std::move(values), mode};
}

// ---------------------------------------------------------------------------
// Universe and verification

Interval candidate_universe(Int n, int k, Mode mode)
{
    if (k < 3) {
        throw Error(ErrorKind::InvalidArity, "k must be at least 3, got " + std::to_string(k));
    }
    if (n < 1) {
        throw Error(ErrorKind::InvalidInput, "n must be positive");
    }
    if (mode == Mode::G) {
        return {2 - n, 2 * n - k + 2};
    }
    return {1, 2 * n - k + 1};
}

bool verify_witness(const SumSet& set, const Witness& witness)
{
    const auto& v = witness.values;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (!set.contains(v[i] + v[j])) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Sum graph and k-clique search

namespace {

class SumGraph {
public:
    SumGraph(const SumSet& set, Interval universe)
        : lo_(universe.lo), size_(static_cast<std::size_t>(universe.length())), words_((size_ + 63) / 64),
          rows_(size_ * words_, 0)
    {
        for (std::size_t u = 0; u < size_; ++u) {
            for (std::size_t v = u + 1; v < size_; ++v) {
                if (set.contains(value(u) + value(v))) {
                    set_bit(row(u), v);
                    set_bit(row(v), u);
                }
            }
        }
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t words() const noexcept { return words_; }
    Int value(std::size_t vertex) const noexcept { return lo_ + static_cast<Int>(vertex); }
    std::uint64_t* row(std::size_t v) noexcept { return rows_.data() + v * words_; }
    const std::uint64_t* row(std::size_t v) const noexcept { return rows_.data() + v * words_; }

    static void set_bit(std::uint64_t* bits, std::size_t i) noexcept
    {
        bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    static void clear_bit(std::uint64_t* bits, std::size_t i) noexcept
    {
        bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

private:
    Int lo_;
    std::size_t size_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

std::size_t popcount(const std::uint64_t* bits, std::size_t words) noexcept
{
    std::size_t c = 0;
    for (std::size_t w = 0; w < words; ++w) {
        c += static_cast<std::size_t>(std::popcount(bits[w]));
    }
    return c;
}

// Lexicographic k-clique search. Candidate sets live in one buffer, one slot
// of `words` per depth.
class CliqueSearch {
public:
    CliqueSearch(const SumGraph& graph, int k, const std::function<bool(std::span<const Int>)>& visit)
        : graph_(graph), k_(static_cast<std::size_t>(k)), visit_(visit),
          cand_((k_ + 1) * graph.words(), 0)
    {
        clique_.reserve(k_);
    }

    std::uint64_t run()
    {
        std::uint64_t* alive = cand_.data();
        for (std::size_t v = 0; v < graph_.size(); ++v) {
            SumGraph::set_bit(alive, v);
        }
        prune_core(alive);
        search(0);
        return examined_;
    }

private:
    // Drops vertices of degree < k-1 until stable.
    void prune_core(std::uint64_t* alive)
    {
        const std::size_t words = graph_.words();
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < graph_.size(); ++v) {
                if (!((alive[v >> 6] >> (v & 63)) & 1U)) {
                    continue;
                }
                std::size_t degree = 0;
                const auto* r = graph_.row(v);
                for (std::size_t w = 0; w < words; ++w) {
                    degree += static_cast<std::size_t>(std::popcount(r[w] & alive[w]));
                }
                if (degree + 1 < k_) {
                    SumGraph::clear_bit(alive, v);
                    changed = true;
                }
            }
        }
    }

    bool search(std::size_t depth)
    {
        ++examined_;
        if (depth == k_) {
            return visit_(clique_);
        }
        const std::size_t words = graph_.words();
        const std::uint64_t* cand = cand_.data() + depth * words;
        std::uint64_t* next = cand_.data() + (depth + 1) * words;
        const std::size_t need = k_ - depth;
        std::size_t remaining = popcount(cand, words);

        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = cand[w];
            while (word != 0) {
                if (remaining < need) {
                    return true;
                }
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                --remaining;

                const auto* r = graph_.row(v);
                std::size_t count = 0;
                for (std::size_t x = 0; x < words; ++x) {
                    std::uint64_t bits = 0;
                    if (x > w) {
                        bits = cand[x] & r[x];
                    } else if (x == w) {
                        bits = word & r[x]; // word holds only bits above v
                    }
                    next[x] = bits;
                    count += static_cast<std::size_t>(std::popcount(bits));
                }
                if (count + 1 < need) {
                    continue;
                }
                clique_.push_back(graph_.value(v));
                const bool keep_going = search(depth + 1);
                clique_.pop_back();
                if (!keep_going) {
                    return false;
                }
            }
        }
        return true;
    }

    const SumGraph& graph_;
    std::size_t k_;
    const std::function<bool(std::span<const Int>)>& visit_;
    std::vector<std::uint64_t> cand_;
    std::vector<Int> clique_;
    std::uint64_t examined_ = 0;
};

} // namespace

std::uint64_t enumerate_witnesses(const SumSet& set, int k, Mode mode,
                                  const std::function<bool(std::span<const Int>)>& visit)
{
    const Interval universe = candidate_universe(set.n(), k, mode);
    if (universe.length() < k) {
        return 0;
    }
    const SumGraph graph(set, universe);
    CliqueSearch search(graph, k, visit);
    return search.run();
}

Certificate find_witness(const SumSet& set, int k, Mode mode)
{
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.universe = candidate_universe(set.n(), k, mode);
    cert.examined = enumerate_witnesses(set, k, mode, [&](std::span<const Int> values) {
        cert.witness = Witness::make(std::vector<Int>(values.begin(), values.end()), mode);
        return false;
    });
    if (cert.witness && !verify_witness(set, *cert.witness)) {
        throw std::logic_error("find_witness produced a witness that does not verify");
    }
    cert.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

} // namespace pairsum
