// The folded matrix built from (B, d), group mutations, and the checks that
// group mutations preserve (Hadamard, double-constant and unfolding
// conditions).
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gca/matrix.hpp"

namespace gca {

// Column layout of a folded matrix: groups D^1..D^N (sizes d_i), the frozen
// group F (size M), then T^1, S^1, ..., T^N, S^N (sizes d_i).
class GroupLayout {
public:
    GroupLayout() = default;
    GroupLayout(DivisorVector d, std::size_t num_frozen);

    std::size_t N() const { return d_.size(); }
    std::size_t M() const { return m_; }
    const DivisorVector& divisors() const { return d_; }
    std::size_t size(std::size_t i) const { return static_cast<std::size_t>(d_[i]); }
    // Total number of rows (the pseudo-rank).
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return 3 * rows_ + m_; }

    std::size_t row(std::size_t group, std::size_t member) const { return offset_[group] + member; }
    std::size_t principal_col(std::size_t group, std::size_t member) const { return offset_[group] + member; }
    std::size_t frozen_col(std::size_t l) const { return rows_ + l; }
    std::size_t t_col(std::size_t group, std::size_t member) const;
    std::size_t s_col(std::size_t group, std::size_t member) const;
    // Group owning a row (or principal column).
    std::size_t group_of_row(std::size_t row) const;

    bool operator==(const GroupLayout& other) const = default;

private:
    DivisorVector d_;
    std::size_t m_ = 0;
    std::size_t rows_ = 0;
    std::vector<std::size_t> offset_;
};

class FoldedMatrix {
public:
    FoldedMatrix(IntMatrix entries, GroupLayout layout, std::int64_t multiplicity, std::vector<std::size_t> history);

    const IntMatrix& entries() const { return entries_; }
    const GroupLayout& layout() const { return layout_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    // The factor written in the slack blocks in place of D.
    std::int64_t multiplicity() const { return multiplicity_; }
    // Group mutations applied since the build.
    const std::vector<std::size_t>& history() const { return history_; }
    std::size_t times_mutated(std::size_t group) const;

    bool operator==(const FoldedMatrix& other) const {
        return entries_ == other.entries_ && layout_ == other.layout_ && multiplicity_ == other.multiplicity_;
    }

private:
    IntMatrix entries_;
    GroupLayout layout_;
    std::int64_t multiplicity_;
    std::vector<std::size_t> history_;
};

// Builds the folded matrix; multiplicity defaults to the total multiplicity
// D and must be divisible by every d_i. Throws InvalidDivisors.
FoldedMatrix build(const ExtendedExchangeMatrix& b, const DivisorVector& d, std::int64_t multiplicity = 0);

// Mutates every row of group k in turn. Throws IndexOutOfRange.
FoldedMatrix group_mutate(const FoldedMatrix& f, std::size_t k);
FoldedMatrix group_mutate_sequence(const FoldedMatrix& f, const std::vector<std::size_t>& seq);
// The same group mutation computed blockwise: every block (Y, Z) outside
// group k gains (|B^{Y,k}| B^{k,Z} + B^{Y,k} |B^{k,Z}|) / 2 as a matrix
// product, and the blocks in row or column group k change sign.
FoldedMatrix group_mutate_blockwise(const FoldedMatrix& f, std::size_t k);

CheckResult hadamard_check(const FoldedMatrix& f, const ExtendedExchangeMatrix& b, const DivisorVector& d);

struct DoubleConstantWitness {
    // Indexed [i][j] over groups.
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::vector<std::int64_t>> c;
    std::vector<std::int64_t> alpha;
};

// Throws StructureViolation naming the offending block.
DoubleConstantWitness double_constant_check(const FoldedMatrix& f);

CheckResult unfolding_conditions_check(const FoldedMatrix& f, const ExtendedExchangeMatrix& b,
                                       const DivisorVector& d);

// Column groups in layout order: D^1..D^N, F, T^1, S^1, ..., T^N, S^N.
std::vector<std::vector<std::size_t>> column_groups(const GroupLayout& layout);

// Matrix text form preceded by '#' comment lines describing the groups.
std::string format_folded(const FoldedMatrix& f);

}  // namespace gca
