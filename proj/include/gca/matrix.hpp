// Extended exchange matrices, divisor vectors, modified matrices and their
// integer mutation rules. Indices are 0-based throughout the library.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gca/errors.hpp"

namespace gca {

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const;
    std::vector<std::int64_t> row(std::size_t i) const;
    const std::vector<std::int64_t>& data() const { return data_; }

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

// N x (N + M) matrix B whose left N x N block is the principal part.
class ExtendedExchangeMatrix {
public:
    ExtendedExchangeMatrix() = default;
    // Throws ValidationError when the shape is not N x (N + M).
    ExtendedExchangeMatrix(IntMatrix entries, std::size_t num_mutable);
    static ExtendedExchangeMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t N() const { return n_; }
    std::size_t M() const { return entries_.cols() - n_; }
    const IntMatrix& entries() const { return entries_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    bool operator==(const ExtendedExchangeMatrix& other) const = default;

private:
    IntMatrix entries_;
    std::size_t n_ = 0;
};

class DivisorVector {
public:
    DivisorVector() = default;
    // Throws InvalidDivisors unless every entry is positive.
    explicit DivisorVector(std::vector<std::int64_t> d);
    static DivisorVector ones(std::size_t n) { return DivisorVector(std::vector<std::int64_t>(n, 1)); }

    std::size_t size() const { return d_.size(); }
    std::int64_t operator[](std::size_t i) const { return d_[i]; }
    const std::vector<std::int64_t>& values() const { return d_; }
    // Product of the divisors.
    std::int64_t total_multiplicity() const;
    // Sum of the divisors.
    std::int64_t pseudo_rank() const;
    std::int64_t lcm() const;

    bool operator==(const DivisorVector& other) const = default;

private:
    std::vector<std::int64_t> d_;
};

// B-hat: principal rows divided by the divisors, slack unchanged.
class ModifiedExchangeMatrix {
public:
    ModifiedExchangeMatrix() = default;
    ModifiedExchangeMatrix(IntMatrix entries, std::size_t num_mutable);
    static ModifiedExchangeMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t N() const { return n_; }
    std::size_t M() const { return entries_.cols() - n_; }
    const IntMatrix& entries() const { return entries_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    bool operator==(const ModifiedExchangeMatrix& other) const = default;

private:
    IntMatrix entries_;
    std::size_t n_ = 0;
};

// Minimal positive integer diagonal D with D * Principal(B) skew-symmetric.
// Throws NotSkewSymmetrizable.
std::vector<std::int64_t> diagonalizer(const ExtendedExchangeMatrix& b);
bool is_skew_symmetrizable(const ExtendedExchangeMatrix& b);

// Throws InvalidDivisors when d has the wrong length or some d_i does not
// divide a principal entry of row i.
void validate_divisors(const ExtendedExchangeMatrix& b, const DivisorVector& d);

ModifiedExchangeMatrix modify(const ExtendedExchangeMatrix& b, const DivisorVector& d);
ExtendedExchangeMatrix unmodify(const ModifiedExchangeMatrix& bh, const DivisorVector& d);

// Standard matrix mutation in direction k. Throws IndexOutOfRange.
ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, std::size_t k);
ExtendedExchangeMatrix mutate_sequence(const ExtendedExchangeMatrix& b, const std::vector<std::size_t>& seq);
// Mutation of a rectangular matrix whose first `num_mutable` columns are
// indexed like the rows. Shared by the folded matrices.
IntMatrix mutate_entries(const IntMatrix& b, std::size_t k);

// Mutation rule of the modified matrix: the correction term is scaled by
// d_k in mutable columns and by d_i in frozen columns.
ModifiedExchangeMatrix mutate_modified(const ModifiedExchangeMatrix& bh, const DivisorVector& d, std::size_t k);

// Text format: a header line "N M" followed by N rows of N + M integers,
// rows separated by ';'. Line breaks are optional whitespace.
std::string format_matrix(const IntMatrix& m, std::size_t num_mutable);
std::string format_matrix(const ExtendedExchangeMatrix& b);
// Returns the matrix and the number of mutable rows. Throws ParseError.
ExtendedExchangeMatrix parse_matrix(std::string_view text);

}  // namespace gca
