#include "pairsum/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

namespace pairsum {

std::string_view to_string(Strategy strategy)
{
    return strategy == Strategy::Exhaustive ? "exhaustive" : "branch-and-bound";
}

std::optional<Strategy> parse_strategy(std::string_view text)
{
    if (text == "exhaustive") {
        return Strategy::Exhaustive;
    }
    if (text == "branch-and-bound" || text == "bnb") {
        return Strategy::BranchAndBound;
    }
    return std::nullopt;
}

namespace {

std::uint64_t low_bits(Int count)
{
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

// Among sets of equal size, the one owning the smallest element of the
// symmetric difference has the lexicographically smaller sorted member list.
bool lex_less(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

std::vector<std::uint64_t> all_sum_masks(Int n, int k, Mode mode)
{
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    enumerate_witnesses(SumSet::full(n), k, mode, [&](std::span<const Int> values) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                mask |= std::uint64_t{1} << (values[i] + values[j] - 1);
            }
        }
        if (seen.insert(mask).second) {
            out.push_back(mask);
        }
        return true;
    });
    return out;
}

std::vector<std::uint64_t> minimal_only(std::vector<std::uint64_t> masks)
{
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint64_t> minimal;
    std::unordered_set<std::uint64_t> minimal_set;
    for (std::uint64_t mask : masks) {
        bool dominated = false;
        if (std::popcount(mask) <= 12) {
            // Walk proper non-empty submasks.
            for (std::uint64_t sub = (mask - 1) & mask; sub != 0 && !dominated; sub = (sub - 1) & mask) {
                dominated = minimal_set.contains(sub);
            }
        } else {
            for (std::uint64_t m : minimal) {
                if ((m & mask) == m) {
                    dominated = true;
                    break;
                }
            }
        }
        if (!dominated) {
            minimal.push_back(mask);
            minimal_set.insert(mask);
        }
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

bool avoids_all(std::uint64_t set, const std::vector<std::uint64_t>& masks)
{
    return std::none_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & set) == m; });
}

// --- exhaustive: OR-zeta transform over all subsets ------------------------

struct Best {
    std::uint64_t set = 0;
    int size = -1;
};

Best exhaustive_search(Int ground, const std::vector<std::uint64_t>& masks)
{
    const std::size_t count = std::size_t{1} << ground;
    std::vector<std::uint8_t> contains(count, 0);
    for (std::uint64_t m : masks) {
        contains[m] = 1;
    }
    for (Int bit = 0; bit < ground; ++bit) {
        const std::size_t step = std::size_t{1} << bit;
        for (std::size_t base = 0; base < count; base += 2 * step) {
            std::uint8_t* hi = contains.data() + base + step;
            const std::uint8_t* lo = contains.data() + base;
            for (std::size_t i = 0; i < step; ++i) {
                hi[i] |= lo[i];
            }
        }
    }
    Best best;
    for (std::size_t s = 0; s < count; ++s) {
        if (contains[s] != 0) {
            continue;
        }
        const int size = std::popcount(static_cast<std::uint64_t>(s));
        if (size > best.size || (size == best.size && lex_less(s, best.set))) {
            best = {s, size};
        }
    }
    return best;
}

// --- branch and bound -------------------------------------------------------

class BranchAndBound {
public:
    BranchAndBound(Int ground, const std::vector<std::uint64_t>& masks) : ground_(ground), by_element_(ground)
    {
        for (std::uint64_t m : masks) {
            for (std::uint64_t bits = m; bits != 0; bits &= bits - 1) {
                by_element_[static_cast<std::size_t>(std::countr_zero(bits))].push_back(m);
            }
        }
    }

    struct Node {
        Int element = 0;
        std::uint64_t chosen = 0;
        std::uint64_t blocked = 0;
    };

    // Largest witness-free size, at least `incumbent`.
    int maximum(int incumbent, unsigned threads)
    {
        best_size_.store(incumbent);
        nodes_.store(0);
        std::vector<Node> tasks;
        split({0, 0, 0}, 4, tasks);

        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            std::uint64_t local_nodes = 0;
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                grow(tasks[i], local_nodes);
            }
            nodes_.fetch_add(local_nodes);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < std::max(1U, threads); ++t) {
            pool.emplace_back(worker);
        }
        worker();
        for (auto& th : pool) {
            th.join();
        }
        return best_size_.load();
    }

    // First set of exactly `target` elements in include-first order, which
    // is the lexicographically smallest one.
    std::optional<std::uint64_t> first_of_size(int target)
    {
        std::uint64_t local_nodes = 0;
        std::optional<std::uint64_t> found;
        find({0, 0, 0}, target, found, local_nodes);
        nodes_.fetch_add(local_nodes);
        return found;
    }

    std::uint64_t nodes() const { return nodes_.load(); }

private:
    int available(const Node& node) const
    {
        const std::uint64_t upper = low_bits(ground_) & ~low_bits(node.element);
        return std::popcount(upper & ~node.blocked);
    }

    Node include(const Node& node) const
    {
        Node next{node.element + 1, node.chosen | (std::uint64_t{1} << node.element), node.blocked};
        for (std::uint64_t m : by_element_[static_cast<std::size_t>(node.element)]) {
            const std::uint64_t rest = m & ~next.chosen;
            if (std::popcount(rest) == 1) {
                next.blocked |= rest;
            }
        }
        return next;
    }

    Node exclude(const Node& node) const { return {node.element + 1, node.chosen, node.blocked}; }

    bool is_blocked(const Node& node) const { return (node.blocked >> node.element) & 1U; }

    void split(const Node& node, int depth, std::vector<Node>& out) const
    {
        if (depth == 0 || node.element == ground_) {
            out.push_back(node);
            return;
        }
        if (!is_blocked(node)) {
            split(include(node), depth - 1, out);
        }
        split(exclude(node), depth - 1, out);
    }

    void grow(const Node& node, std::uint64_t& nodes)
    {
        ++nodes;
        const int size = std::popcount(node.chosen);
        if (size + available(node) <= best_size_.load(std::memory_order_relaxed)) {
            return;
        }
        if (node.element == ground_) {
            int current = best_size_.load();
            while (size > current && !best_size_.compare_exchange_weak(current, size)) {
            }
            return;
        }
        if (!is_blocked(node)) {
            grow(include(node), nodes);
        }
        grow(exclude(node), nodes);
    }

    void find(const Node& node, int target, std::optional<std::uint64_t>& found, std::uint64_t& nodes) const
    {
        ++nodes;
        const int size = std::popcount(node.chosen);
        if (found || size + available(node) < target) {
            return;
        }
        if (size == target) {
            found = node.chosen;
            return;
        }
        if (!is_blocked(node)) {
            find(include(node), target, found, nodes);
        }
        find(exclude(node), target, found, nodes);
    }

    Int ground_;
    std::vector<std::vector<std::uint64_t>> by_element_;
    std::atomic<int> best_size_{0};
    std::atomic<std::uint64_t> nodes_{0};
};

} // namespace

std::vector<std::uint64_t> sum_masks(Int n, int k, Mode mode, bool minimal)
{
    if (2 * n > 64) {
        throw Error(ErrorKind::BudgetExceeded, "sum masks need 2n <= 64");
    }
    auto masks = all_sum_masks(n, k, mode);
    if (minimal) {
        return minimal_only(std::move(masks));
    }
    std::sort(masks.begin(), masks.end());
    return masks;
}

ThresholdResult max_witnessfree(Int n, int k, Mode mode, Strategy strategy, const SearchLimits& limits)
{
    candidate_universe(n, k, mode); // validates n and k
    const Int ground = 2 * n;
    const Int cap = strategy == Strategy::Exhaustive ? limits.exhaustive_max_ground : limits.bnb_max_ground;
    if (ground > cap) {
        throw Error(ErrorKind::BudgetExceeded, "2n = " + std::to_string(ground) + " exceeds the "
                                                   + std::string(to_string(strategy)) + " limit of "
                                                   + std::to_string(cap));
    }

    const auto all = all_sum_masks(n, k, mode);
    const auto minimal = minimal_only(all);

    ThresholdResult result;
    result.n = n;
    result.k = k;
    result.mode = mode;
    result.strategy = strategy;
    result.sum_masks = all.size();
    result.minimal_masks = minimal.size();

    std::uint64_t best_set = 0;
    if (strategy == Strategy::Exhaustive) {
        const Best best = exhaustive_search(ground, minimal);
        best_set = best.set;
        result.nodes = std::uint64_t{1} << ground;
    } else {
        BranchAndBound search(ground, minimal);
        const std::uint64_t odds = 0x5555555555555555ULL & low_bits(ground);
        const int incumbent = avoids_all(odds, minimal) ? std::popcount(odds) : 0;
        const int size = search.maximum(incumbent, limits.threads);
        const auto found = search.first_of_size(size);
        if (!found) {
            throw std::logic_error("branch-and-bound lost its own optimum");
        }
        best_set = *found;
        result.nodes = search.nodes();
    }

    result.extremal_set = SumSet::from_mask(n, best_set);
    if (find_witness(result.extremal_set, k, mode).found()) {
        throw std::logic_error("reported extremal set admits a witness");
    }
    const Int size = static_cast<Int>(result.extremal_set.size());
    result.threshold = size - n + 1;
    result.vacuous_above = n + result.threshold > ground;
    return result;
}

ThresholdValue exact_threshold(Int n, int k, Mode mode, const SearchLimits& limits)
{
    const Strategy strategy =
        2 * n <= limits.exhaustive_max_ground ? Strategy::Exhaustive : Strategy::BranchAndBound;
    const ThresholdResult r = max_witnessfree(n, k, mode, strategy, limits);
    return {r.threshold, r.vacuous_above};
}

// ---------------------------------------------------------------------------
// Randomized hunt

namespace {

class Hunter {
public:
    Hunter(Int n, int k, Mode mode, const HuntOptions& options)
        : n_(n), k_(k), mode_(mode), options_(options), rng_(options.seed)
    {
    }

    std::optional<SumSet> run()
    {
        std::uint64_t restart = 0;
        while (!exhausted()) {
            SumSet current = SumSet::full(n_);
            descend(current, 0);
            maximalize(current);
            emit({{"event", "restart"}, {"restart", restart}, {"size", current.size()}, {"nodes", used_}});
            if (record(current)) {
                return best_;
            }
            const std::uint64_t moves = 20 * static_cast<std::uint64_t>(2 * n_);
            for (std::uint64_t i = 0; i < moves && !exhausted(); ++i) {
                SumSet candidate = current;
                const auto absent = missing(candidate);
                if (absent.empty()) {
                    break;
                }
                const Int added = absent[pick(absent.size())];
                candidate.insert(added);
                descend(candidate, added);
                maximalize(candidate);
                if (candidate.size() + 1 >= current.size()) {
                    current = std::move(candidate);
                }
                if (record(current)) {
                    return best_;
                }
            }
            ++restart;
        }
        emit({{"event", "done"}, {"found", false}, {"best_size", best_size_}, {"nodes", used_}});
        return std::nullopt;
    }

private:
    bool exhausted() const { return used_ >= options_.budget; }

    std::size_t pick(std::size_t count) { return static_cast<std::size_t>(rng_() % count); }

    Certificate query(const SumSet& set)
    {
        Certificate cert = find_witness(set, k_, mode_);
        used_ += cert.examined + 1;
        return cert;
    }

    // Removes witness sums until the set is witness-free; `keep` is never removed.
    void descend(SumSet& set, Int keep)
    {
        while (true) {
            const Certificate cert = query(set);
            if (!cert.found()) {
                return;
            }
            std::vector<Int> sums;
            const auto& v = cert.witness->values;
            for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    const Int s = v[i] + v[j];
                    if (s != keep && std::find(sums.begin(), sums.end(), s) == sums.end()) {
                        sums.push_back(s);
                    }
                }
            }
            std::sort(sums.begin(), sums.end());
            set.erase(sums[pick(sums.size())]);
        }
    }

    std::vector<Int> missing(const SumSet& set) const
    {
        std::vector<Int> out;
        for (Int v = 1; v <= 2 * n_; ++v) {
            if (!set.contains(v)) {
                out.push_back(v);
            }
        }
        return out;
    }

    void maximalize(SumSet& set)
    {
        auto absent = missing(set);
        for (std::size_t i = absent.size(); i > 1; --i) {
            std::swap(absent[i - 1], absent[pick(i)]);
        }
        for (Int v : absent) {
            if (exhausted()) {
                return;
            }
            set.insert(v);
            if (query(set).found()) {
                set.erase(v);
            }
        }
    }

    bool record(const SumSet& set)
    {
        if (static_cast<Int>(set.size()) > best_size_) {
            best_size_ = static_cast<Int>(set.size());
            best_ = set;
            emit({{"event", "improved"}, {"size", best_size_}, {"members", set.members()}, {"nodes", used_}});
        }
        if (best_ && best_size_ >= n_ + options_.target) {
            if (query(*best_).found()) {
                throw std::logic_error("hunt result admits a witness");
            }
            emit({{"event", "done"}, {"found", true}, {"best_size", best_size_}, {"nodes", used_}});
            return true;
        }
        return false;
    }

    void emit(const nlohmann::json& record) const
    {
        if (options_.progress) {
            options_.progress(record);
        }
    }

    Int n_;
    int k_;
    Mode mode_;
    const HuntOptions& options_;
    std::mt19937_64 rng_;
    std::uint64_t used_ = 0;
    Int best_size_ = -1;
    std::optional<SumSet> best_;
};

} // namespace

std::optional<SumSet> hunt(Int n, int k, Mode mode, const HuntOptions& options)
{
    candidate_universe(n, k, mode);
    if (options.target < 1) {
        throw Error(ErrorKind::InvalidInput, "target must be at least 1");
    }
    Hunter hunter(n, k, mode, options);
    return hunter.run();
}

} // namespace pairsum
