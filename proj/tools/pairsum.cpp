// pairsum: command-line front end for witness search, constructions,
// threshold tables, example families, bound constants and Sidon sets.
//
// Exit status: 0 success, 1 usage error, 2 hypothesis/precondition
// violation, 3 budget exceeded, 4 precision indeterminate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairsum/bounds.hpp"
#include "pairsum/constructive.hpp"
#include "pairsum/core.hpp"
#include "pairsum/extremal.hpp"
#include "pairsum/families.hpp"
#include "pairsum/json_io.hpp"
#include "pairsum/sidon.hpp"

namespace {

using nlohmann::json;
using namespace pairsum;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BudgetExceeded: return 3;
    case ErrorKind::PrecisionIndeterminate: return 4;
    case ErrorKind::InvalidInput: return 1;
    default: return 2;
    }
}

void print_error(std::string_view kind, std::string_view message, const std::vector<Int>& subject = {})
{
    json err = {{"error", kind}, {"message", message}};
    if (!subject.empty()) {
        err["subject"] = subject;
    }
    std::cerr << err.dump() << '\n';
}

unsigned default_threads()
{
    if (const char* env = std::getenv("PAIRSUM_THREADS")) {
        try {
            const int value = std::stoi(env);
            if (value > 0) {
                return static_cast<unsigned>(value);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

Mode mode_of(const std::string& text)
{
    if (auto m = parse_mode(text)) {
        return *m;
    }
    throw UsageError("unknown mode '" + text + "' (expected g or h)");
}

struct SetSource {
    std::string inline_json;
    std::string path;

    SumSet load() const
    {
        if (!inline_json.empty() && !path.empty()) {
            throw UsageError("pass either --set or --set-file, not both");
        }
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) {
                throw UsageError("cannot read " + path);
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            return parse_sumset(buffer.str());
        }
        if (inline_json.empty()) {
            throw UsageError("a set is required (--set or --set-file)");
        }
        return parse_sumset(inline_json);
    }

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--set", inline_json, R"(set as JSON {"n": int, "members": [ascending ints]})");
        cmd->add_option("--set-file", path, "file holding the set JSON");
    }
};

std::vector<Int> parse_int_list(const std::string& text)
{
    json value;
    try {
        value = json::parse(text);
    } catch (const json::parse_error&) {
        throw UsageError("expected a JSON array of integers");
    }
    if (!value.is_array()) {
        throw UsageError("expected a JSON array of integers");
    }
    std::vector<Int> out;
    for (const auto& v : value) {
        if (!v.is_number_integer()) {
            throw UsageError("expected a JSON array of integers");
        }
        out.push_back(v.get<Int>());
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i - 1] >= out[i]) {
            throw UsageError("integer list must be strictly ascending");
        }
    }
    return out;
}

void emit(const json& value, const std::string& format)
{
    std::cout << (format == "text" ? value.dump(2) : value.dump()) << '\n';
}

json construction_json(const Construction& c)
{
    return {{"witness", c.witness.values}, {"mode", to_string(c.witness.mode)}, {"trace", c.trace}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pairsum: guaranteed pairwise sums in subsets of {1..2n}"};
    app.require_subcommand(1);
    std::string format = "json";
    unsigned threads = default_threads();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", threads, "worker threads (default: $PAIRSUM_THREADS or 1)")
        ->check(CLI::PositiveNumber);

    // witness
    auto* witness = app.add_subcommand("witness", "search for k integers with all pairwise sums in A");
    SetSource witness_set;
    witness_set.attach(witness);
    int witness_k = 3;
    std::string witness_mode = "g";
    bool witness_all = false;
    witness->add_option("--k", witness_k, "number of integers")->required();
    witness->add_option("--mode", witness_mode, "g (integers) or h (positive integers)");
    witness->add_flag("--all", witness_all, "debug: list every witness instead of a certificate");

    // construct
    auto* construct = app.add_subcommand("construct", "run a constructive builder");
    SetSource construct_set;
    construct_set.attach(construct);
    std::string builder;
    Int construct_c = 0;
    int construct_k = 3;
    std::string construct_variant = "strict";
    std::string construct_evens;
    construct
        ->add_option("--builder", builder, "g3 | g3_nonneg | g4 | g5_allodds | even_lemma | g5_bounded | h4_bounded")
        ->required()
        ->check(CLI::IsMember({"g3", "g3_nonneg", "g4", "g5_allodds", "even_lemma", "g5_bounded", "h4_bounded"}));
    construct->add_option("--C", construct_c, "constant for the bounded builders");
    construct->add_option("--k", construct_k, "arity for even_lemma");
    construct->add_option("--variant", construct_variant, "strict | weak (even_lemma)");
    construct->add_option("--evens", construct_evens, "even set for even_lemma as a JSON array");

    // table
    auto* table = app.add_subcommand("table", "exact thresholds g_k(n) / h_k(n) for a range of n");
    int table_k = 3;
    std::string table_mode = "g";
    Int n_from = 1;
    Int n_to = 1;
    std::string table_strategy;
    table->add_option("--k", table_k)->required();
    table->add_option("--mode", table_mode);
    table->add_option("--n-from", n_from)->required();
    table->add_option("--n-to", n_to)->required();
    table->add_option("--strategy", table_strategy, "exhaustive | branch-and-bound (default: by size)");

    // family
    auto* family = app.add_subcommand("family", "generate and certify a named example set");
    std::string family_name;
    Int family_n = 1;
    int family_k = 3;
    std::string family_mode = "g";
    Int universe_cap = kDefaultUniverseCap;
    family->add_option("--name", family_name)->required();
    family->add_option("--n", family_n)->required();
    family->add_option("--k", family_k)->required();
    family->add_option("--mode", family_mode);
    family->add_option("--universe-cap", universe_cap, "largest candidate universe to search");

    // constants
    auto* constants = app.add_subcommand("constants", "solve and verify the dominance constants");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate f_k(x) or F_k(x)");
    int bounds_k = 3;
    double bounds_x = 1.0;
    std::string bounds_variant = "strict";
    bounds->add_option("--k", bounds_k)->required();
    bounds->add_option("--x", bounds_x)->required();
    bounds->add_option("--variant", bounds_variant, "strict | weak");

    // sidon
    auto* sidon = app.add_subcommand("sidon", "Sidon set utilities");
    sidon->require_subcommand(1);
    auto* sidon_check = sidon->add_subcommand("check", "test the Sidon and weak Sidon properties");
    std::string sidon_set;
    sidon_check->add_option("--set", sidon_set, "ascending JSON array")->required();
    auto* sidon_build = sidon->add_subcommand("build", "build a Sidon subset of [1, limit]");
    Int sidon_limit = 1;
    std::string sidon_method = "modular";
    sidon_build->add_option("--limit", sidon_limit)->required();
    sidon_build->add_option("--method", sidon_method, "greedy | modular");

    // hunt
    auto* hunt_cmd = app.add_subcommand("hunt", "randomized search for large witness-free sets (JSON lines)");
    Int hunt_n = 1;
    int hunt_k = 5;
    std::string hunt_mode = "g";
    HuntOptions hunt_options;
    hunt_cmd->add_option("--n", hunt_n)->required();
    hunt_cmd->add_option("--k", hunt_k)->required();
    hunt_cmd->add_option("--mode", hunt_mode);
    hunt_cmd->add_option("--target", hunt_options.target, "look for |A| >= n + target")->required();
    hunt_cmd->add_option("--budget", hunt_options.budget, "search node budget");
    hunt_cmd->add_option("--seed", hunt_options.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (format == "csv" && !table->parsed()) {
            throw UsageError("csv output is only available for table");
        }

        if (witness->parsed()) {
            const SumSet set = witness_set.load();
            const Mode mode = mode_of(witness_mode);
            if (witness_all) {
                json list = json::array();
                enumerate_witnesses(set, witness_k, mode, [&](std::span<const Int> v) {
                    list.push_back(std::vector<Int>(v.begin(), v.end()));
                    return true;
                });
                emit({{"witnesses", list}, {"count", list.size()}}, format);
            } else {
                emit(to_json(find_witness(set, witness_k, mode)), format);
            }
        } else if (construct->parsed()) {
            Construction result = [&] {
                if (builder == "even_lemma") {
                    const auto variant = parse_bound_variant(construct_variant);
                    if (!variant) {
                        throw UsageError("unknown variant '" + construct_variant + "'");
                    }
                    if (construct_evens.empty()) {
                        throw UsageError("even_lemma needs --evens");
                    }
                    const auto evens = parse_int_list(construct_evens);
                    return construct_even_lemma(evens, construct_k, *variant);
                }
                const SumSet set = construct_set.load();
                if (builder == "g3") {
                    return construct_g3(set);
                }
                if (builder == "g3_nonneg") {
                    return construct_g3_nonneg(set);
                }
                if (builder == "g4") {
                    return construct_g4(set);
                }
                if (builder == "g5_allodds") {
                    return construct_g5_allodds(set);
                }
                if (construct_c < 1) {
                    throw UsageError("the bounded builders need --C >= 1");
                }
                return builder == "g5_bounded" ? construct_g5_bounded(set, construct_c)
                                               : construct_h4_bounded(set, construct_c);
            }();
            emit(construction_json(result), format);
        } else if (table->parsed()) {
            const Mode mode = mode_of(table_mode);
            if (n_from < 1 || n_to < n_from) {
                throw UsageError("need 1 <= n-from <= n-to");
            }
            SearchLimits limits;
            limits.threads = threads;
            std::optional<Strategy> strategy;
            if (!table_strategy.empty()) {
                strategy = parse_strategy(table_strategy);
                if (!strategy) {
                    throw UsageError("unknown strategy '" + table_strategy + "'");
                }
            }
            json rows = json::array();
            std::ostringstream csv;
            csv << "n,k,mode,threshold,vacuous_above,extremal_size\n";
            for (Int n = n_from; n <= n_to; ++n) {
                const Strategy s = strategy.value_or(2 * n <= limits.exhaustive_max_ground
                                                         ? Strategy::Exhaustive
                                                         : Strategy::BranchAndBound);
                const ThresholdResult r = max_witnessfree(n, table_k, mode, s, limits);
                rows.push_back(to_json(r));
                csv << n << ',' << table_k << ',' << to_string(mode) << ',' << r.threshold << ','
                    << (r.vacuous_above ? "true" : "false") << ',' << r.extremal_set.size() << '\n';
            }
            if (format == "csv") {
                std::cout << csv.str();
            } else {
                emit(rows, format);
            }
        } else if (family->parsed()) {
            const auto name = parse_family(family_name);
            if (!name) {
                throw UsageError("unknown family '" + family_name + "'");
            }
            emit(to_json(certify_family(*name, family_n, family_k, mode_of(family_mode), universe_cap)), format);
        } else if (constants->parsed()) {
            const std::int64_t g5 = solve_g5_constant();
            constexpr std::int64_t kH4 = 3166;
            if (!check_dominance(h4_query(kH4))) {
                throw Error(ErrorKind::DomainError, "C = 3166 does not dominate F_4");
            }
            emit({{"g5_C", g5}, {"h4_C_verified", kH4}}, format);
        } else if (bounds->parsed()) {
            const auto variant = parse_bound_variant(bounds_variant);
            if (!variant) {
                throw UsageError("unknown variant '" + bounds_variant + "'");
            }
            json out = {{"k", bounds_k}, {"x", bounds_x}, {"variant", to_string(*variant)},
                        {"value", eval_bound(bounds_k, bounds_x, *variant)}};
            emit(out, format);
        } else if (sidon_check->parsed()) {
            const auto set = parse_int_list(sidon_set);
            emit({{"set", set}, {"sidon", is_sidon(set)}, {"weak_sidon", is_weak_sidon(set)}}, format);
        } else if (sidon_build->parsed()) {
            const auto method = parse_sidon_method(sidon_method);
            if (!method) {
                throw UsageError("unknown method '" + sidon_method + "'");
            }
            const auto set = build_sidon(sidon_limit, *method);
            emit({{"limit", sidon_limit}, {"method", to_string(*method)}, {"size", set.size()}, {"set", set}},
                 format);
        } else if (hunt_cmd->parsed()) {
            const Mode mode = mode_of(hunt_mode);
            hunt_options.progress = [](const json& record) { std::cout << record.dump() << '\n' << std::flush; };
            const auto found = hunt(hunt_n, hunt_k, mode, hunt_options);
            json result = {{"event", "result"}, {"set", found ? to_json(*found) : json(nullptr)}};
            if (found && hunt_k == 5 && mode == Mode::G && static_cast<Int>(found->size()) >= hunt_n + 5) {
                result["counterexample_candidate"] = true;
                std::cerr << "WARNING: witness-free set with |A| >= n + 5 for k = 5 (g-mode); "
                             "this would contradict g_5(n) <= 5. Re-verify independently.\n";
            }
            std::cout << result.dump() << '\n';
        }
    } catch (const UsageError& e) {
        print_error("usage-error", e.what());
        return 1;
    } catch (const Error& e) {
        print_error(to_string(e.kind()), e.what(), e.subject());
        return exit_code(e.kind());
    }
    return 0;
}
