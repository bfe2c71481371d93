#include "gca/matrix.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

#include "gca/checked.hpp"

namespace gca {

using detail::checked_add;
using detail::checked_mul;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw ValidationError("matrix data size does not match its shape");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    std::vector<std::int64_t> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw ValidationError("ragged matrix rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return IntMatrix(r, c, std::move(data));
}

std::int64_t IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return (*this)(i, j);
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
    if (i >= rows_) throw IndexOutOfRange("row " + std::to_string(i) + " out of range");
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

ExtendedExchangeMatrix::ExtendedExchangeMatrix(IntMatrix entries, std::size_t num_mutable)
    : entries_(std::move(entries)), n_(num_mutable) {
    if (entries_.rows() != n_ || entries_.cols() < n_)
        throw ValidationError("exchange matrix must have shape N x (N+M)");
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    return ExtendedExchangeMatrix(IntMatrix::from_rows(rows), rows.size());
}

ModifiedExchangeMatrix::ModifiedExchangeMatrix(IntMatrix entries, std::size_t num_mutable)
    : entries_(std::move(entries)), n_(num_mutable) {
    if (entries_.rows() != n_ || entries_.cols() < n_)
        throw ValidationError("modified matrix must have shape N x (N+M)");
}

ModifiedExchangeMatrix ModifiedExchangeMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    return ModifiedExchangeMatrix(IntMatrix::from_rows(rows), rows.size());
}

DivisorVector::DivisorVector(std::vector<std::int64_t> d) : d_(std::move(d)) {
    for (auto v : d_)
        if (v < 1) throw InvalidDivisors("divisors must be positive, got " + std::to_string(v));
}

std::int64_t DivisorVector::total_multiplicity() const {
    std::int64_t p = 1;
    for (auto v : d_) p = checked_mul(p, v);
    return p;
}

std::int64_t DivisorVector::pseudo_rank() const {
    std::int64_t s = 0;
    for (auto v : d_) s = checked_add(s, v);
    return s;
}

std::int64_t DivisorVector::lcm() const {
    std::int64_t l = 1;
    for (auto v : d_) l = checked_mul(l / std::gcd(l, v), v);
    return l;
}

// ------------------------------------------------------------ diagonalizer

std::vector<std::int64_t> diagonalizer(const ExtendedExchangeMatrix& b) {
    const std::size_t n = b.N();
    for (std::size_t i = 0; i < n; ++i) {
        if (b(i, i) != 0) throw NotSkewSymmetrizable("nonzero diagonal entry in row " + std::to_string(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto x = b(i, j), y = b(j, i);
            if ((x == 0) != (y == 0) || (x != 0 && (x > 0) == (y > 0)))
                throw NotSkewSymmetrizable("sign pattern violated at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
        }
    }
    // Each component of the graph of nonzero entries is solved by propagating
    // the ratio d_j / d_i = -B_ij / B_ji as a reduced fraction num/den.
    std::vector<std::int64_t> num(n, 0), den(n, 1);
    std::vector<std::int64_t> result(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (num[root] != 0) continue;
        num[root] = 1;
        den[root] = 1;
        std::vector<std::size_t> component{root};
        for (std::size_t head = 0; head < component.size(); ++head) {
            const std::size_t i = component[head];
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || b(i, j) == 0) continue;
                // d_j = d_i * B_ij / (-B_ji)
                std::int64_t nj = checked_mul(num[i], std::llabs(b(i, j)));
                std::int64_t dj = checked_mul(den[i], std::llabs(b(j, i)));
                const std::int64_t g = std::gcd(nj, dj);
                nj /= g;
                dj /= g;
                if (num[j] == 0) {
                    num[j] = nj;
                    den[j] = dj;
                    component.push_back(j);
                } else if (num[j] != nj || den[j] != dj) {
                    throw NotSkewSymmetrizable("inconsistent ratio constraints at (" + std::to_string(i) + "," +
                                               std::to_string(j) + ")");
                }
            }
        }
        std::int64_t l = 1;
        for (auto i : component) l = checked_mul(l / std::gcd(l, den[i]), den[i]);
        std::int64_t g = 0;
        for (auto i : component) {
            result[i] = checked_mul(num[i], l / den[i]);
            g = std::gcd(g, result[i]);
        }
        for (auto i : component) result[i] /= g;
    }
    return result;
}

bool is_skew_symmetrizable(const ExtendedExchangeMatrix& b) {
    try {
        diagonalizer(b);
        return true;
    } catch (const NotSkewSymmetrizable&) {
        return false;
    }
}

void validate_divisors(const ExtendedExchangeMatrix& b, const DivisorVector& d) {
    if (d.size() != b.N())
        throw InvalidDivisors("expected " + std::to_string(b.N()) + " divisors, got " + std::to_string(d.size()));
    for (std::size_t i = 0; i < b.N(); ++i)
        for (std::size_t j = 0; j < b.N(); ++j)
            if (b(i, j) % d[i] != 0)
                throw InvalidDivisors("d_" + std::to_string(i + 1) + " = " + std::to_string(d[i]) +
                                      " does not divide B(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ") = " + std::to_string(b(i, j)));
}

ModifiedExchangeMatrix modify(const ExtendedExchangeMatrix& b, const DivisorVector& d) {
    validate_divisors(b, d);
    IntMatrix e = b.entries();
    for (std::size_t i = 0; i < b.N(); ++i)
        for (std::size_t j = 0; j < b.N(); ++j) e(i, j) /= d[i];
    return ModifiedExchangeMatrix(std::move(e), b.N());
}

ExtendedExchangeMatrix unmodify(const ModifiedExchangeMatrix& bh, const DivisorVector& d) {
    if (d.size() != bh.N()) throw InvalidDivisors("divisor vector length does not match the matrix");
    IntMatrix e = bh.entries();
    for (std::size_t i = 0; i < bh.N(); ++i)
        for (std::size_t j = 0; j < bh.N(); ++j) e(i, j) = checked_mul(e(i, j), d[i]);
    return ExtendedExchangeMatrix(std::move(e), bh.N());
}

// -------------------------------------------------------------- mutation

namespace {

// (|a| b + a |b|) / 2, which is a*b when both are positive, -|a b| when both
// are negative and 0 otherwise.
std::int64_t correction(std::int64_t a, std::int64_t b) {
    if (a > 0 && b > 0) return checked_mul(a, b);
    if (a < 0 && b < 0) return -checked_mul(a, b);
    return 0;
}

void check_direction(std::size_t k, std::size_t n) {
    if (k >= n)
        throw IndexOutOfRange("mutation direction " + std::to_string(k + 1) + " outside 1.." + std::to_string(n));
}

}  // namespace

IntMatrix mutate_entries(const IntMatrix& b, std::size_t k) {
    check_direction(k, b.rows());
    IntMatrix out = b;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == k || j == k)
                out(i, j) = -b(i, j);
            else
                out(i, j) = checked_add(b(i, j), correction(b(i, k), b(k, j)));
        }
    }
    return out;
}

ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, std::size_t k) {
    check_direction(k, b.N());
    return ExtendedExchangeMatrix(mutate_entries(b.entries(), k), b.N());
}

ExtendedExchangeMatrix mutate_sequence(const ExtendedExchangeMatrix& b, const std::vector<std::size_t>& seq) {
    ExtendedExchangeMatrix cur = b;
    for (auto k : seq) cur = mutate(cur, k);
    return cur;
}

ModifiedExchangeMatrix mutate_modified(const ModifiedExchangeMatrix& bh, const DivisorVector& d, std::size_t k) {
    check_direction(k, bh.N());
    if (d.size() != bh.N()) throw InvalidDivisors("divisor vector length does not match the matrix");
    const auto& b = bh.entries();
    IntMatrix out = b;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
                continue;
            }
            const std::int64_t scale = j < bh.N() ? d[k] : d[i];
            out(i, j) = checked_add(b(i, j), checked_mul(scale, correction(b(i, k), b(k, j))));
        }
    }
    return ModifiedExchangeMatrix(std::move(out), bh.N());
}

// ------------------------------------------------------------ text format

std::string format_matrix(const IntMatrix& m, std::size_t num_mutable) {
    std::ostringstream out;
    out << m.rows() << ' ' << (m.cols() - num_mutable) << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << (i + 1 < m.rows() ? ";\n" : "\n");
    }
    return out.str();
}

std::string format_matrix(const ExtendedExchangeMatrix& b) { return format_matrix(b.entries(), b.N()); }

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    bool at_end() const { return pos >= text.size(); }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, col); }

    std::int64_t integer() {
        skip_space();
        const std::size_t start = pos;
        const std::size_t l = line, c = col;
        if (!at_end() && (text[pos] == '-' || text[pos] == '+')) advance();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            line = l;
            col = c;
            fail("expected an integer");
        }
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
        try {
            return std::stoll(std::string(text.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            line = l;
            col = c;
            fail("integer out of range");
        }
    }
};

}  // namespace

ExtendedExchangeMatrix parse_matrix(std::string_view text) {
    Cursor cur{text};
    const auto n = cur.integer();
    const auto m = cur.integer();
    if (n < 0 || m < 0) cur.fail("matrix dimensions must be non-negative");
    const auto cols = static_cast<std::size_t>(n + m);
    std::vector<std::int64_t> data;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cur.skip_space();
            if (!cur.at_end() && cur.text[cur.pos] == ';')
                cur.fail("row " + std::to_string(i + 1) + " has " + std::to_string(j) + " entries, expected " +
                         std::to_string(cols));
            data.push_back(cur.integer());
        }
        cur.skip_space();
        if (i + 1 < n) {
            if (cur.at_end() || cur.text[cur.pos] != ';') cur.fail("expected ';' after row " + std::to_string(i + 1));
            cur.advance();
        }
    }
    cur.skip_space();
    if (!cur.at_end() && cur.text[cur.pos] == ';') {
        cur.advance();
        cur.skip_space();
    }
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return ExtendedExchangeMatrix(IntMatrix(static_cast<std::size_t>(n), cols, std::move(data)),
                                  static_cast<std::size_t>(n));
}

}  // namespace gca
