#include "gca/cli.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gca/io.hpp"
#include "gca/verify.hpp"

namespace gca {

namespace {

using Json = nlohmann::ordered_json;

struct LabeledSeed {
    std::string label;
    GeneralizedSeed seed;
};

// --seed takes a fixture name, "random:N" (verify only) or a path;
// --seed-file always takes a path.
std::vector<LabeledSeed> resolve_seeds(const std::string& seed, const std::string& seed_file, std::uint64_t rng_seed,
                                       bool allow_random) {
    if (!seed.empty() && !seed_file.empty()) throw InputError("give either --seed or --seed-file, not both");
    if (!seed_file.empty()) return {{seed_file, read_seed(seed_file)}};
    if (seed.empty()) throw InputError("a seed is required (--seed or --seed-file)");
    if (is_fixture(seed)) return {{seed, fixture(seed)}};
    constexpr std::string_view prefix = "random:";
    if (seed.compare(0, prefix.size(), prefix) == 0) {
        if (!allow_random) throw InputError("random seeds are only accepted by verify");
        std::size_t count = 0;
        try {
            count = std::stoul(seed.substr(prefix.size()));
        } catch (const std::exception&) {
            throw InputError("--seed random:N needs a positive count");
        }
        if (count == 0) throw InputError("--seed random:N needs a positive count");
        std::mt19937_64 rng(rng_seed);
        std::vector<LabeledSeed> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back({"random-" + std::to_string(i + 1), random_seed(rng)});
        return out;
    }
    return {{seed, read_seed(seed)}};
}

GeneralizedSeed single_seed(const std::string& seed, const std::string& seed_file) {
    return resolve_seeds(seed, seed_file, 0, false).front().seed;
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

std::vector<std::vector<std::string>> strings_text(const GeneralizedSeed& seed) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : seed.strings()) {
        std::vector<std::string> r;
        for (const auto& p : row) r.push_back(monomial_to_string(*seed.table(), p));
        out.push_back(std::move(r));
    }
    return out;
}

// Canonical text of a seed including its cluster; used for digests.
std::string canonical_state(const GeneralizedSeed& seed) {
    std::ostringstream out;
    out << format_matrix(seed.matrix());
    for (const auto& row : strings_text(seed)) {
        for (std::size_t r = 0; r < row.size(); ++r) out << (r ? " " : "") << row[r];
        out << '\n';
    }
    for (std::size_t i = 0; i < seed.N(); ++i)
        out << seed.table()->symbol(seed.cluster_symbol(i)).name << " = " << to_string(seed.cluster()[i]) << '\n';
    return out.str();
}

std::string sequence_text(const std::vector<std::size_t>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i] + 1);
    return s;
}

int cmd_mutate(const GeneralizedSeed& seed, const std::vector<std::size_t>& seq, bool json, std::ostream& out) {
    const GeneralizedSeed cur = mutate_seed_sequence(seed, seq);
    const auto& table = *cur.table();
    if (json) {
        Json j;
        std::vector<std::size_t> one_based;
        for (auto k : seq) one_based.push_back(k + 1);
        j["sequence"] = one_based;
        j["matrix"] = matrix_json(cur.matrix().entries());
        j["modified"] = matrix_json(cur.modified().entries());
        Json cluster = Json::object();
        for (std::size_t i = 0; i < cur.N(); ++i)
            cluster[table.symbol(cur.cluster_symbol(i)).name] = to_string(cur.cluster()[i]);
        j["cluster"] = cluster;
        j["strings"] = strings_text(cur);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "# sequence: " << (seq.empty() ? "(none)" : sequence_text(seq)) << '\n';
    out << "matrix\n" << format_matrix(cur.matrix());
    out << "modified\n" << format_matrix(cur.modified().entries(), cur.N());
    out << "strings\n";
    const auto strings = strings_text(cur);
    for (std::size_t i = 0; i < strings.size(); ++i) {
        out << "p" << i + 1 << ":";
        for (const auto& p : strings[i]) out << ' ' << p;
        out << '\n';
    }
    out << "cluster\n";
    for (std::size_t i = 0; i < cur.N(); ++i)
        out << table.symbol(cur.cluster_symbol(i)).name << " = " << to_string(cur.cluster()[i]) << '\n';
    return kExitOk;
}

int cmd_unfold(const GeneralizedSeed& seed, const std::vector<std::size_t>& seq, AdjoinMode mode, bool json,
               std::ostream& out) {
    const FoldedMatrix f =
        group_mutate_sequence(build(seed.matrix(), seed.divisors(), adjoin_exponent(seed.divisors(), mode)), seq);
    if (json) {
        Json j;
        Json groups = Json::array();
        const char* names[] = {"D", "F", "T", "S"};
        const auto cols = column_groups(f.layout());
        for (std::size_t g = 0; g < cols.size(); ++g) {
            std::string name;
            const std::size_t n = f.layout().N();
            if (g < n)
                name = names[0] + std::to_string(g + 1);
            else if (g == n)
                name = names[1];
            else
                name = std::string((g - n - 1) % 2 == 0 ? names[2] : names[3]) + std::to_string((g - n - 1) / 2 + 1);
            std::vector<std::size_t> one_based;
            for (auto c : cols[g]) one_based.push_back(c + 1);
            groups.push_back(Json{{"name", name}, {"columns", one_based}});
        }
        j["multiplicity"] = f.multiplicity();
        j["groups"] = groups;
        j["matrix"] = matrix_json(f.entries());
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << format_folded(f);
    return kExitOk;
}

int cmd_adjoin(const GeneralizedSeed& seed, AdjoinMode mode, int frozen, std::int64_t root, bool json,
               std::ostream& out) {
    AdjoinedSeed adj = frozen > 0 ? adjoin_root(seed, static_cast<std::size_t>(frozen - 1), root) : tau_tilde(seed, mode);
    const auto& s = adj.seed();
    const auto& table = *s.table();
    std::vector<std::string> thetas, taus;
    for (std::size_t k = 0; k < s.N(); ++k) {
        thetas.push_back(to_string(exchange_polynomial_formal(s, k)));
        const auto res = homogeneity_check(s, k);
        taus.push_back(res ? monomial_to_string(table, tau_variable(adj, k)) : "");
    }
    if (json) {
        Json j;
        j["seed"] = format_seed(s);
        j["exchange"] = thetas;
        j["tau"] = taus;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << format_seed(s);
    for (std::size_t k = 0; k < s.N(); ++k) {
        const auto& name = table.symbol(s.cluster_symbol(k)).name;
        out << "# theta_" << name << " = " << thetas[k] << '\n';
        out << "# tau_" << name << " = " << (taus[k].empty() ? "(not homogeneous)" : taus[k]) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& target_text, const std::vector<LabeledSeed>& seeds, const SequencePlan& plan,
               AdjoinMode mode, bool json, std::ostream& out) {
    const VerifyTarget target = parse_target(target_text);
    const auto results = parallel_cases(seeds.size(), thread_count_from_env(), [&](std::size_t i) {
        return verify_seed(target, seeds[i].label, seeds[i].seed, plan, mode);
    });
    std::size_t total = 0, failures = 0;
    for (const auto& records : results)
        for (const auto& r : records) {
            out << format_record(r, json) << '\n';
            ++total;
            if (!r.ok) ++failures;
        }
    if (!json) out << "# " << total << " checks, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_trace(const GeneralizedSeed& seed, const std::vector<std::size_t>& seq, AdjoinMode mode, bool times,
              std::ostream& out) {
    using clock = std::chrono::steady_clock;
    TraceLog log;
    GeneralizedSeed cur = seed;
    FoldedMatrix f = build(seed.matrix(), seed.divisors(), adjoin_exponent(seed.divisors(), mode));
    for (auto k : seq) {
        auto t0 = clock::now();
        cur = mutate_seed(cur, k);
        log.append("mutate", k, clock::now() - t0, canonical_state(cur));
        t0 = clock::now();
        f = group_mutate(f, k);
        log.append("group-mutate", k, clock::now() - t0, format_folded(f));
    }
    out << log.format(times);
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized cluster algebra seeds, mutations and the folded cluster algebra"};
    app.require_subcommand(1);

    std::string seed, seed_file, sequence_arg, mode_text = "total", sequences = "exhaustive", target;
    std::size_t depth = 3;
    std::uint64_t rng_seed = 1;
    bool json = false, times = false;
    int frozen = 0;
    std::int64_t root = 1;

    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "fixture name (FIX-A, FIX-B, FIX-C) or seed file path");
        sub->add_option("--seed-file", seed_file, "seed file path");
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--adjoin-mode", mode_text, "root exponent: total (product of divisors) or lcm");
    };

    auto* mutate = app.add_subcommand("mutate", "mutate a seed along a sequence and print the result");
    add_seed(mutate);
    mutate->add_option("--sequence", sequence_arg, "comma separated 1-based directions");
    mutate->add_flag("--json", json, "machine-readable output");

    auto* unfold = app.add_subcommand("unfold", "print the folded matrix, optionally after group mutations");
    add_seed(unfold);
    add_mode(unfold);
    unfold->add_option("--sequence", sequence_arg, "comma separated 1-based groups");
    unfold->add_flag("--json", json, "machine-readable output");

    auto* adjoin = app.add_subcommand("adjoin", "adjoin roots of frozen variables");
    add_seed(adjoin);
    add_mode(adjoin);
    adjoin->add_option("--frozen", frozen, "adjoin a root of this frozen variable only (1-based)");
    adjoin->add_option("--root", root, "root exponent used with --frozen");
    adjoin->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("target", target, "hadamard | double-constant | laurent | product-formula | embedding | subquotient")
        ->required();
    add_seed(verify);
    add_mode(verify);
    verify->add_option("--depth", depth, "length of the tested sequences");
    verify->add_option("--sequences", sequences, "exhaustive or random:N");
    verify->add_option("--rng-seed", rng_seed, "seed for random sequences and random:N seeds");
    verify->add_flag("--json", json, "one JSON record per check");

    auto* trace = app.add_subcommand("trace", "log digests of every mutation and group mutation");
    add_seed(trace);
    add_mode(trace);
    trace->add_option("--sequence", sequence_arg, "comma separated 1-based directions");
    trace->add_flag("--times", times, "include elapsed times (output is then not reproducible)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        const AdjoinMode mode = parse_adjoin_mode(mode_text);
        const auto seq = parse_sequence(sequence_arg);
        if (mutate->parsed()) return cmd_mutate(single_seed(seed, seed_file), seq, json, out);
        if (unfold->parsed()) return cmd_unfold(single_seed(seed, seed_file), seq, mode, json, out);
        if (adjoin->parsed()) {
            if (frozen < 0) throw InputError("--frozen must be positive");
            return cmd_adjoin(single_seed(seed, seed_file), mode, frozen, root, json, out);
        }
        if (verify->parsed())
            return cmd_verify(target, resolve_seeds(seed, seed_file, rng_seed, true),
                              parse_sequence_plan(sequences, depth, rng_seed), mode, json, out);
        if (trace->parsed()) return cmd_trace(single_seed(seed, seed_file), seq, mode, times, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const MathError& e) {
        err << "mismatch: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitInput;
}

}  // namespace gca
