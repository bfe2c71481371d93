// Verification suites shared by the command-line tool and the tests: every
// check is run after every prefix of the tested mutation sequences.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gca/quotient.hpp"

namespace gca {

enum class VerifyTarget { hadamard, double_constant, laurent, product_formula, embedding, subquotient };

std::string_view target_name(VerifyTarget target);
// Throws InputError for unknown names.
VerifyTarget parse_target(std::string_view text);

struct SequencePlan {
    std::size_t depth = 3;
    // 0 means every word of length depth; otherwise this many random words
    // without immediate repetitions.
    std::size_t random_count = 0;
    std::uint64_t rng_seed = 1;
};

// Parses "exhaustive" or "random:N". Throws InputError.
SequencePlan parse_sequence_plan(std::string_view text, std::size_t depth, std::uint64_t rng_seed);

struct CaseRecord {
    std::string target;
    std::string seed;
    // 0-based mutation indices of the full tested sequence.
    std::vector<std::size_t> sequence;
    bool ok = true;
    std::string detail;
};

// Runs one target on one seed. Every tested sequence yields one record; a
// failure at a prefix is reported for every sequence extending it.
std::vector<CaseRecord> verify_seed(VerifyTarget target, const std::string& label, const GeneralizedSeed& seed,
                                    const SequencePlan& plan, AdjoinMode mode = AdjoinMode::total);

// Calls fn(i) for i in [0, n) on up to `threads` worker threads and
// returns the results in index order.
std::vector<std::vector<CaseRecord>> parallel_cases(std::size_t n, std::size_t threads,
                                                    const std::function<std::vector<CaseRecord>(std::size_t)>& fn);

// Worker count from the GCA_THREADS environment variable (default 1).
std::size_t thread_count_from_env();

std::string format_record(const CaseRecord& record, bool json);

}  // namespace gca
