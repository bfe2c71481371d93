// Seed files, the bundled fixtures, random seeds and sequences, and the
// trace log used by the command-line tool.
//
// Seed file grammar (one statement per line, '#' starts a comment):
//   gca-seed 1
//   size <N> <M>
//   [cluster <name> x N]          default x1..xN
//   [frozen <name> x M]           default f1..fM
//   divisors <d_1> ... <d_N>
//   matrix
//   <N rows of N+M integers>
//   strings
//   { p <i> <r> : <M integers> }  exponent vector of p_{i,r}, 0 < r < d_i
//   end
// Indices are 1-based. Strings that are not listed are 1.
#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gca/seed.hpp"

namespace gca {

GeneralizedSeed parse_seed(std::string_view text);
// Canonical text form; parse_seed(format_seed(s)) reproduces s and
// format_seed(parse_seed(t)) == t for canonical t.
std::string format_seed(const GeneralizedSeed& seed);
// Throws InputError when the file cannot be read or written.
GeneralizedSeed read_seed(const std::string& path);
void write_seed(const GeneralizedSeed& seed, const std::string& path);

// Names of the bundled seeds, in a fixed order.
const std::vector<std::string>& fixture_names();
bool is_fixture(std::string_view name);
// Throws InputError for unknown names.
GeneralizedSeed fixture(std::string_view name);

struct RandomSeedOptions {
    std::size_t max_rank = 3;
    std::size_t max_frozen = 2;
    std::int64_t max_divisor = 3;
    std::int64_t max_entry = 4;
    // Bound on |B_ij B_ji| for every pair, and on the sum of these over all
    // pairs, which keeps the growth of cluster variables polynomial.
    std::int64_t max_product = 4;
    std::int64_t max_product_sum = 4;
    // Bound on the absolute exponents in the coefficient strings.
    std::int32_t max_string_exponent = 1;
};

// B = diag(d) S with S skew-symmetric, so the modified matrix is S.
GeneralizedSeed random_seed(std::mt19937_64& rng, const RandomSeedOptions& options = {});
// A sequence of the given length without immediate repetitions (for N = 1
// the only choice is repeated).
std::vector<std::size_t> random_sequence(std::mt19937_64& rng, std::size_t n, std::size_t length);
// Every word of exactly the given length over 0..n-1, in lexicographic
// order; prefixes cover the shorter ones.
std::vector<std::vector<std::size_t>> all_sequences(std::size_t n, std::size_t length);

// Parses a comma or space separated list of 1-based indices into 0-based
// ones. Throws ParseError.
std::vector<std::size_t> parse_sequence(std::string_view text);

std::string sha256_hex(std::string_view text);

class TraceLog {
public:
    struct Record {
        std::string operation;
        std::size_t index;
        double elapsed_ms;
        std::string digest;
    };

    // Records an operation with the digest of its canonical output.
    void append(std::string operation, std::size_t index, std::chrono::steady_clock::duration elapsed,
                std::string_view canonical_output);
    const std::vector<Record>& records() const { return records_; }
    // One line per record; elapsed times are omitted when deterministic
    // output is wanted.
    std::string format(bool with_times) const;

private:
    std::vector<Record> records_;
};

}  // namespace gca
