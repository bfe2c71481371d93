#include "gca/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

namespace gca {

// ------------------------------------------------------------ seed files

namespace {

struct Token {
    std::string text;
    std::size_t col;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line out{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            out.tokens.push_back(Token{std::string(line.substr(i, j - i)), i + 1});
            i = j;
        }
        if (!out.tokens.empty()) lines.push_back(std::move(out));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

class SeedParser {
public:
    explicit SeedParser(std::string_view text) : lines_(tokenize(text)) {}

    GeneralizedSeed parse() {
        expect_keyword("gca-seed");
        const auto& header = current();
        if (header.tokens.size() != 2 || header.tokens[1].text != "1")
            fail(header, header.tokens.size() > 1 ? 1 : 0, "unsupported seed file version");
        advance();

        expect_keyword("size");
        const auto& size_line = current();
        require_count(size_line, 3);
        const auto n = static_cast<std::size_t>(integer(size_line, 1, 0));
        const auto m = static_cast<std::size_t>(integer(size_line, 2, 0));
        advance();

        std::vector<std::string> cluster, frozen;
        for (std::size_t i = 0; i < n; ++i) cluster.push_back("x" + std::to_string(i + 1));
        for (std::size_t j = 0; j < m; ++j) frozen.push_back("f" + std::to_string(j + 1));
        if (at_keyword("cluster")) cluster = names(n);
        if (at_keyword("frozen")) frozen = names(m);

        expect_keyword("divisors");
        const auto& div_line = current();
        require_count(div_line, n + 1);
        std::vector<std::int64_t> d;
        for (std::size_t i = 0; i < n; ++i) d.push_back(integer(div_line, i + 1, 1));
        advance();

        expect_keyword("matrix");
        require_count(current(), 1);
        advance();
        IntMatrix b(n, n + m);
        for (std::size_t i = 0; i < n; ++i) {
            if (done()) fail_eof("matrix row");
            const auto& row = current();
            require_count(row, n + m);
            for (std::size_t j = 0; j < n + m; ++j) b(i, j) = integer(row, j, std::nullopt);
            advance();
        }

        std::vector<Symbol> symbols;
        for (const auto& c : cluster) symbols.push_back(Symbol{c, Role::cluster, -1, -1});
        for (const auto& f : frozen) symbols.push_back(Symbol{f, Role::frozen, -1, -1});
        TablePtr table;
        try {
            table = make_table(std::move(symbols));
        } catch (const Error& e) {
            throw ValidationError(std::string("seed file names: ") + e.what());
        }
        DivisorVector divisors(d);
        auto strings = GeneralizedSeed::trivial_strings(*table, divisors);

        expect_keyword("strings");
        require_count(current(), 1);
        advance();
        std::vector<std::vector<bool>> seen(n);
        for (std::size_t i = 0; i < n; ++i) seen[i].assign(static_cast<std::size_t>(d[i]) + 1, false);
        while (!done() && current().tokens[0].text == "p") {
            const auto& line = current();
            require_count(line, 4 + m);
            const auto i = integer(line, 1, 1);
            const auto r = integer(line, 2, 1);
            if (static_cast<std::size_t>(i) > n) fail(line, 1, "string index outside 1.." + std::to_string(n));
            const auto ui = static_cast<std::size_t>(i - 1);
            if (r >= d[ui]) fail(line, 2, "r must satisfy 0 < r < d_i = " + std::to_string(d[ui]));
            if (line.tokens[3].text != ":") fail(line, 3, "expected ':'");
            if (seen[ui][static_cast<std::size_t>(r)]) fail(line, 0, "string entry listed twice");
            seen[ui][static_cast<std::size_t>(r)] = true;
            Monomial p(table->size());
            for (std::size_t j = 0; j < m; ++j)
                p[n + j] = static_cast<Exponent>(integer(line, 4 + j, std::nullopt));
            strings[ui][static_cast<std::size_t>(r)] = std::move(p);
            advance();
        }
        expect_keyword("end");
        require_count(current(), 1);
        advance();
        if (!done()) fail(current(), 0, "unexpected content after 'end'");

        return GeneralizedSeed::initial(table, ExtendedExchangeMatrix(std::move(b), n), std::move(divisors),
                                        std::move(strings));
    }

private:
    std::vector<Line> lines_;
    std::size_t index_ = 0;

    bool done() const { return index_ >= lines_.size(); }
    const Line& current() const { return lines_[index_]; }
    void advance() { ++index_; }

    [[noreturn]] void fail(const Line& line, std::size_t token, const std::string& what) const {
        const std::size_t col = token < line.tokens.size() ? line.tokens[token].col : 1;
        throw ParseError(what, line.number, col);
    }

    [[noreturn]] void fail_eof(const std::string& what) const {
        const std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
        throw ParseError("unexpected end of input, expected " + what, last, 1);
    }

    bool at_keyword(std::string_view k) const { return !done() && current().tokens[0].text == k; }

    void expect_keyword(std::string_view k) const {
        if (done()) fail_eof("'" + std::string(k) + "'");
        if (current().tokens[0].text != k) fail(current(), 0, "expected '" + std::string(k) + "'");
    }

    void require_count(const Line& line, std::size_t count) const {
        if (line.tokens.size() != count)
            fail(line, std::min(line.tokens.size(), count),
                 "expected " + std::to_string(count) + " fields, found " + std::to_string(line.tokens.size()));
    }

    std::int64_t integer(const Line& line, std::size_t token, std::optional<std::int64_t> minimum) const {
        const auto& text = line.tokens[token].text;
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size()) fail(line, token, "expected an integer");
        if (minimum && v < *minimum) fail(line, token, "value must be at least " + std::to_string(*minimum));
        return v;
    }

    std::vector<std::string> names(std::size_t count) {
        const auto& line = current();
        require_count(line, count + 1);
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= count; ++i) out.push_back(line.tokens[i].text);
        advance();
        return out;
    }
};

}  // namespace

GeneralizedSeed parse_seed(std::string_view text) { return SeedParser(text).parse(); }

std::string format_seed(const GeneralizedSeed& seed) {
    const auto& table = *seed.table();
    const std::size_t n = seed.N(), m = seed.M();
    if (table.size() != n + m) throw ValidationError("only seeds over cluster and frozen symbols can be written");
    std::ostringstream out;
    out << "gca-seed 1\n";
    out << "size " << n << ' ' << m << '\n';
    if (n > 0) {
        out << "cluster";
        for (std::size_t i = 0; i < n; ++i) out << ' ' << table.symbol(seed.cluster_symbol(i)).name;
        out << '\n';
    }
    if (m > 0) {
        out << "frozen";
        for (std::size_t j = 0; j < m; ++j) out << ' ' << table.symbol(seed.frozen_symbol(j)).name;
        out << '\n';
    }
    out << "divisors";
    for (std::size_t i = 0; i < n; ++i) out << ' ' << seed.d(i);
    out << "\nmatrix\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n + m; ++j) out << (j ? " " : "") << seed.matrix()(i, j);
        out << '\n';
    }
    out << "strings\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t r = 1; r < seed.d(i); ++r) {
            const auto& p = seed.strings()[i][static_cast<std::size_t>(r)];
            out << "p " << i + 1 << ' ' << r << " :";
            for (std::size_t j = 0; j < m; ++j) out << ' ' << p[seed.frozen_symbol(j)];
            out << '\n';
        }
    out << "end\n";
    return out.str();
}

GeneralizedSeed read_seed(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open seed file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_seed(buf.str());
}

void write_seed(const GeneralizedSeed& seed, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write seed file '" + path + "'");
    out << format_seed(seed);
    if (!out) throw InputError("error while writing '" + path + "'");
}

// ------------------------------------------------------------- fixtures

namespace {

const std::map<std::string, std::string, std::less<>>& fixture_texts() {
    static const std::map<std::string, std::string, std::less<>> texts{
        {"FIX-A",
         "gca-seed 1\n"
         "size 2 2\n"
         "cluster x1 x2\n"
         "frozen a b\n"
         "divisors 2 3\n"
         "matrix\n"
         "0 8 -3 5\n"
         "-12 0 -2 7\n"
         "strings\n"
         "p 1 1 : 1 -1\n"
         "p 2 1 : 0 1\n"
         "p 2 2 : -1 2\n"
         "end\n"},
        {"FIX-B",
         "gca-seed 1\n"
         "size 2 5\n"
         "cluster x y\n"
         "frozen a b p1x p2x p1y\n"
         "divisors 3 2\n"
         "matrix\n"
         "0 3 -4 2 0 0 0\n"
         "-2 0 0 -3 0 0 0\n"
         "strings\n"
         "p 1 1 : 0 0 1 0 0\n"
         "p 1 2 : 0 0 0 1 0\n"
         "p 2 1 : 0 0 0 0 1\n"
         "end\n"},
        {"FIX-C",
         "gca-seed 1\n"
         "size 1 1\n"
         "cluster x\n"
         "frozen f\n"
         "divisors 2\n"
         "matrix\n"
         "0 2\n"
         "strings\n"
         "p 1 1 : -2\n"
         "end\n"},
    };
    return texts;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"FIX-A", "FIX-B", "FIX-C"};
    return names;
}

bool is_fixture(std::string_view name) { return fixture_texts().count(name) > 0; }

GeneralizedSeed fixture(std::string_view name) {
    const auto& texts = fixture_texts();
    const auto it = texts.find(name);
    if (it == texts.end()) throw InputError("unknown fixture '" + std::string(name) + "'");
    return parse_seed(it->second);
}

// ---------------------------------------------------------- random data

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

GeneralizedSeed random_seed(std::mt19937_64& rng, const RandomSeedOptions& options) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(options.max_rank)));
    const auto m = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(options.max_frozen)));
    std::vector<std::int64_t> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(uniform(rng, 1, options.max_divisor));

    IntMatrix b(n, n + m);
    for (;;) {
        std::int64_t product_sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                // Admissible values of S_ij: |d_i S| and |d_j S| within the
                // entry bound and d_i d_j S^2 within the product bound.
                std::vector<std::int64_t> choices;
                for (std::int64_t s = -options.max_entry; s <= options.max_entry; ++s) {
                    if (std::abs(d[i] * s) > options.max_entry || std::abs(d[j] * s) > options.max_entry) continue;
                    if (d[i] * d[j] * s * s > options.max_product) continue;
                    choices.push_back(s);
                }
                const auto pick = uniform(rng, 0, static_cast<std::int64_t>(choices.size()) - 1);
                const auto s = choices[static_cast<std::size_t>(pick)];
                b(i, j) = d[i] * s;
                b(j, i) = -d[j] * s;
                product_sum += d[i] * d[j] * s * s;
            }
        if (product_sum <= options.max_product_sum) break;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < m; ++l) b(i, n + l) = uniform(rng, -options.max_entry, options.max_entry);

    std::vector<Symbol> symbols;
    for (std::size_t i = 0; i < n; ++i) symbols.push_back(Symbol{"x" + std::to_string(i + 1), Role::cluster, -1, -1});
    for (std::size_t l = 0; l < m; ++l) symbols.push_back(Symbol{"f" + std::to_string(l + 1), Role::frozen, -1, -1});
    TablePtr table = make_table(std::move(symbols));
    DivisorVector divisors(d);
    auto strings = GeneralizedSeed::trivial_strings(*table, divisors);
    for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t r = 1; r < d[i]; ++r)
            for (std::size_t l = 0; l < m; ++l)
                strings[i][static_cast<std::size_t>(r)][n + l] =
                    static_cast<Exponent>(uniform(rng, -options.max_string_exponent, options.max_string_exponent));
    return GeneralizedSeed::initial(table, ExtendedExchangeMatrix(std::move(b), n), std::move(divisors),
                                    std::move(strings));
}

std::vector<std::size_t> random_sequence(std::mt19937_64& rng, std::size_t n, std::size_t length) {
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < length; ++i) {
        if (n == 1) {
            seq.push_back(0);
            continue;
        }
        std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        while (!seq.empty() && k == seq.back()) k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        seq.push_back(k);
    }
    return seq;
}

std::vector<std::vector<std::size_t>> all_sequences(std::size_t n, std::size_t length) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t step = 0; step < length; ++step) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : out)
            for (std::size_t k = 0; k < n; ++k) {
                auto t = s;
                t.push_back(k);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::size_t> parse_sequence(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
        if (ec != std::errc() || ptr != text.data() + j || v < 1)
            throw ParseError("sequence entries must be positive integers", 1, i + 1);
        out.push_back(static_cast<std::size_t>(v - 1));
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------- trace

std::string sha256_hex(std::string_view text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 computation failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

void TraceLog::append(std::string operation, std::size_t index, std::chrono::steady_clock::duration elapsed,
                      std::string_view canonical_output) {
    const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    records_.push_back(Record{std::move(operation), index, ms, sha256_hex(canonical_output)});
}

std::string TraceLog::format(bool with_times) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        out << i + 1 << ' ' << r.operation << ' ' << r.index + 1 << ' ' << r.digest;
        if (with_times) out << ' ' << std::fixed << std::setprecision(3) << r.elapsed_ms << "ms";
        out << '\n';
    }
    return out.str();
}

}  // namespace gca
