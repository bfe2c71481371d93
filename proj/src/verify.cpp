#include "gca/verify.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gca/io.hpp"

namespace gca {

namespace {

constexpr std::pair<VerifyTarget, std::string_view> kTargets[] = {
    {VerifyTarget::hadamard, "hadamard"},
    {VerifyTarget::double_constant, "double-constant"},
    {VerifyTarget::laurent, "laurent"},
    {VerifyTarget::product_formula, "product-formula"},
    {VerifyTarget::embedding, "embedding"},
    {VerifyTarget::subquotient, "subquotient"},
};

std::string join_one_based(const std::vector<std::size_t>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i] + 1);
    return out;
}

}  // namespace

std::string_view target_name(VerifyTarget target) {
    for (const auto& [t, name] : kTargets)
        if (t == target) return name;
    return "unknown";
}

VerifyTarget parse_target(std::string_view text) {
    for (const auto& [t, name] : kTargets)
        if (name == text) return t;
    throw InputError("unknown verify target '" + std::string(text) + "'");
}

SequencePlan parse_sequence_plan(std::string_view text, std::size_t depth, std::uint64_t rng_seed) {
    SequencePlan plan{depth, 0, rng_seed};
    if (text == "exhaustive") return plan;
    constexpr std::string_view prefix = "random:";
    if (text.substr(0, prefix.size()) == prefix) {
        const auto digits = text.substr(prefix.size());
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && n > 0) {
            plan.random_count = n;
            return plan;
        }
    }
    throw InputError("--sequences must be 'exhaustive' or 'random:N' with N > 0, got '" + std::string(text) + "'");
}

namespace {

// Walks the tested sequences, checking the state after every prefix.
template <class State, class Check, class Step>
class Walker {
public:
    Walker(CaseRecord proto, std::size_t n, std::size_t depth, Check check, Step step)
        : proto_(std::move(proto)), n_(n), depth_(depth), check_(std::move(check)), step_(std::move(step)) {}

    void exhaustive(const State& root, std::vector<CaseRecord>& out) {
        std::vector<std::size_t> prefix;
        visit(root, prefix, out);
    }

    void along(const State& root, const std::vector<std::size_t>& seq, std::vector<CaseRecord>& out) {
        std::optional<State> cur(root);
        for (std::size_t i = 0;; ++i) {
            const std::vector<std::size_t> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
            if (auto res = guarded_check(*cur); !res) {
                out.push_back(record(seq, false, at(prefix) + res.detail));
                return;
            }
            if (i == seq.size()) break;
            try {
                cur.emplace(step_(*cur, seq[i]));
            } catch (const MathError& e) {
                out.push_back(record(seq, false, at(prefix) + "mutation " + std::to_string(seq[i] + 1) + ": " + e.what()));
                return;
            }
        }
        out.push_back(record(seq, true, ""));
    }

private:
    CaseRecord proto_;
    std::size_t n_;
    std::size_t depth_;
    Check check_;
    Step step_;

    CheckResult guarded_check(const State& s) {
        try {
            return check_(s);
        } catch (const MathError& e) {
            return CheckResult::fail(e.what());
        }
    }

    static std::string at(const std::vector<std::size_t>& prefix) {
        return prefix.empty() ? "at the initial seed: " : "after " + join_one_based(prefix) + ": ";
    }

    CaseRecord record(std::vector<std::size_t> seq, bool ok, std::string detail) const {
        CaseRecord r = proto_;
        r.sequence = std::move(seq);
        r.ok = ok;
        r.detail = std::move(detail);
        return r;
    }

    // Reports a failure for every completion of prefix to full depth.
    void fail_below(std::vector<std::size_t>& prefix, const std::string& detail, std::vector<CaseRecord>& out) {
        if (prefix.size() == depth_) {
            out.push_back(record(prefix, false, detail));
            return;
        }
        for (std::size_t k = 0; k < n_; ++k) {
            prefix.push_back(k);
            fail_below(prefix, detail, out);
            prefix.pop_back();
        }
    }

    void visit(const State& s, std::vector<std::size_t>& prefix, std::vector<CaseRecord>& out) {
        if (auto res = guarded_check(s); !res) {
            const std::string detail = at(prefix) + res.detail;
            fail_below(prefix, detail, out);
            return;
        }
        if (prefix.size() == depth_) {
            out.push_back(record(prefix, true, ""));
            return;
        }
        for (std::size_t k = 0; k < n_; ++k) {
            std::optional<State> next;
            try {
                next.emplace(step_(s, k));
            } catch (const MathError& e) {
                const std::string detail = at(prefix) + "mutation " + std::to_string(k + 1) + ": " + e.what();
                prefix.push_back(k);
                fail_below(prefix, detail, out);
                prefix.pop_back();
                continue;
            }
            prefix.push_back(k);
            visit(*next, prefix, out);
            prefix.pop_back();
        }
    }
};

template <class State, class Check, class Step>
std::vector<CaseRecord> run_walk(CaseRecord proto, std::size_t n, const SequencePlan& plan, const State& root,
                                 Check check, Step step) {
    std::vector<CaseRecord> out;
    Walker<State, Check, Step> walker(std::move(proto), n, plan.depth, std::move(check), std::move(step));
    if (plan.random_count == 0) {
        walker.exhaustive(root, out);
    } else {
        std::mt19937_64 rng(plan.rng_seed);
        for (std::size_t i = 0; i < plan.random_count; ++i) walker.along(root, random_sequence(rng, n, plan.depth), out);
    }
    return out;
}

struct BothMatrices {
    FoldedMatrix folded;
    ExtendedExchangeMatrix b;
};

struct EmbeddingState {
    FormalAdjoinedSeed formal;
    FoldedSeed folded;
};

}  // namespace

std::vector<CaseRecord> verify_seed(VerifyTarget target, const std::string& label, const GeneralizedSeed& seed,
                                    const SequencePlan& plan, AdjoinMode mode) {
    CaseRecord proto{std::string(target_name(target)), label, {}, true, ""};
    const std::size_t n = seed.N();
    const auto initial = GeneralizedSeed::initial(seed.table(), seed.matrix(), seed.divisors(), seed.strings());
    const std::int64_t multiplicity = adjoin_exponent(seed.divisors(), mode);
    switch (target) {
        case VerifyTarget::laurent:
            return run_walk(
                proto, n, plan, initial, [](const GeneralizedSeed&) { return CheckResult::pass(); },
                [](const GeneralizedSeed& s, std::size_t k) { return mutate_seed(s, k); });
        case VerifyTarget::hadamard: {
            const DivisorVector d = seed.divisors();
            return run_walk(
                proto, n, plan, BothMatrices{build(seed.matrix(), d, multiplicity), seed.matrix()},
                [d](const BothMatrices& s) {
                    if (auto res = hadamard_check(s.folded, s.b, d); !res) return res;
                    return unfolding_conditions_check(s.folded, s.b, d);
                },
                [](const BothMatrices& s, std::size_t k) {
                    return BothMatrices{group_mutate(s.folded, k), mutate(s.b, k)};
                });
        }
        case VerifyTarget::double_constant:
            return run_walk(
                proto, n, plan, build(seed.matrix(), seed.divisors(), multiplicity),
                [](const FoldedMatrix& f) {
                    double_constant_check(f);
                    return CheckResult::pass();
                },
                [](const FoldedMatrix& f, std::size_t k) { return group_mutate(f, k); });
        case VerifyTarget::product_formula:
            return run_walk(
                proto, n, plan, folded_initial_seed(initial, mode, false),
                [](const FoldedSeed& fs) {
                    for (std::size_t k = 0; k < fs.folded_table()->layout.N(); ++k)
                        if (auto res = product_formula_check(fs, k); !res) return res;
                    return CheckResult::pass();
                },
                [](const FoldedSeed& fs, std::size_t k) { return group_mutate(fs, k); });
        case VerifyTarget::embedding: {
            EmbeddingState root{formalize(tau_tilde(initial, mode)), folded_initial_seed(initial, mode)};
            auto ctx = std::make_shared<QuotientContext>(root.folded.folded_table());
            return run_walk(
                proto, n, plan, root,
                [ctx](const EmbeddingState& s) {
                    if (auto res = specialization_check(s.formal); !res) return res;
                    return embedding_conditions(s.formal, s.folded, *ctx);
                },
                [](const EmbeddingState& s, std::size_t k) {
                    return EmbeddingState{mutate_formal(s.formal, k), group_mutate(s.folded, k)};
                });
        }
        case VerifyTarget::subquotient: {
            CaseRecord r = proto;
            try {
                const auto res = subquotient_check(initial, mode);
                r.ok = res.ok;
                r.detail = res.detail;
            } catch (const MathError& e) {
                r.ok = false;
                r.detail = e.what();
            }
            return {r};
        }
    }
    return {};
}

std::vector<std::vector<CaseRecord>> parallel_cases(std::size_t n, std::size_t threads,
                                                    const std::function<std::vector<CaseRecord>(std::size_t)>& fn) {
    std::vector<std::vector<CaseRecord>> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = std::max<std::size_t>(1, std::min(threads, n));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::size_t thread_count_from_env() {
    const char* value = std::getenv("GCA_THREADS");
    if (!value || !*value) return 1;
    std::size_t n = 0;
    const std::string_view text(value);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || ptr != text.data() + text.size() || n == 0)
        throw InputError("GCA_THREADS must be a positive integer, got '" + std::string(text) + "'");
    return n;
}

std::string format_record(const CaseRecord& record, bool json) {
    if (json) {
        nlohmann::ordered_json j;
        j["target"] = record.target;
        j["seed"] = record.seed;
        std::vector<std::size_t> one_based;
        for (auto k : record.sequence) one_based.push_back(k + 1);
        j["sequence"] = one_based;
        j["status"] = record.ok ? "pass" : "fail";
        if (!record.detail.empty()) j["detail"] = record.detail;
        return j.dump();
    }
    std::string line = std::string(record.ok ? "pass" : "FAIL") + " " + record.target + " " + record.seed;
    line += " [" + join_one_based(record.sequence) + "]";
    if (!record.detail.empty()) line += ": " + record.detail;
    return line;
}

}  // namespace gca
