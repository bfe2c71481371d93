// The folded cluster algebra attached to a generalized seed: its variable
// table, seeds and group mutations, the group monomials, normal forms modulo
// the coefficient ideal, the product formula and the embedding of the
// root-adjoined generalized cluster algebra.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gca/root_adjoin.hpp"
#include "gca/unfolding.hpp"

namespace gca {

// Symbols of the folded algebra, in matrix column order: y<k>_<a> for every
// row, one F symbol per frozen variable, then t<k>_<a>, s<k>_<a> group by
// group, followed by the placeholders rho<k>_<r> (0 < r < d_k) standing for
// generalized coefficients. All indices in names are 1-based.
struct FoldedTable {
    TablePtr table;
    GroupLayout layout;
    // Symbol index of every matrix column.
    std::vector<std::size_t> column_symbol;
    // placeholder[k][r] for 0 < r < d_k; other slots hold npos.
    std::vector<std::vector<std::size_t>> placeholder;
    // F symbol of every frozen variable of the generalized seed.
    std::vector<std::size_t> frozen_symbol;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t y(std::size_t k, std::size_t a) const { return column_symbol[layout.principal_col(k, a)]; }
    std::size_t t(std::size_t k, std::size_t a) const { return column_symbol[layout.t_col(k, a)]; }
    std::size_t s(std::size_t k, std::size_t a) const { return column_symbol[layout.s_col(k, a)]; }
};

using FoldedTablePtr = std::shared_ptr<const FoldedTable>;

// Builds the folded table for a generalized seed's frozen names and divisors.
FoldedTablePtr make_folded_table(const GeneralizedSeed& gca);

// Name of the placeholder standing for the r-th generalized coefficient of
// group k (both 0-based here, 1-based in the name).
std::string placeholder_name(std::size_t k, std::int64_t r);

class FoldedSeed {
public:
    FoldedSeed(FoldedTablePtr table, FoldedMatrix matrix, std::vector<LaurentPolynomial> cluster);

    const FoldedTablePtr& folded_table() const { return table_; }
    const TablePtr& table() const { return table_->table; }
    const FoldedMatrix& matrix() const { return matrix_; }
    // Cluster variables in row order, expanded in the initial folded
    // cluster; empty for a skeleton seed that tracks only the matrix.
    const std::vector<LaurentPolynomial>& cluster() const { return cluster_; }
    bool has_cluster() const { return !cluster_.empty(); }
    const std::vector<std::size_t>& history() const { return matrix_.history(); }

private:
    FoldedTablePtr table_;
    FoldedMatrix matrix_;
    std::vector<LaurentPolynomial> cluster_;
};

// The initial folded seed with multiplicity adjoin_exponent(d, mode).
FoldedSeed folded_initial_seed(const GeneralizedSeed& gca, AdjoinMode mode = AdjoinMode::total,
                               bool with_cluster = true);

// Ordinary exchange binomial of a row, written in the current cluster
// symbols (the y symbols read as the current cluster).
LaurentPolynomial folded_exchange_formal(const FoldedSeed& fs, std::size_t row);

// Mutates every row of group k; cluster variables are updated by exact
// division. Throws IndexOutOfRange or InexactDivision.
FoldedSeed group_mutate(const FoldedSeed& fs, std::size_t k);
FoldedSeed group_mutate_sequence(const FoldedSeed& fs, const std::vector<std::size_t>& seq);

// Positive and negative parts of a row over the cluster columns and over
// the remaining columns, as monomials in the current cluster symbols and
// the frozen symbols.
struct RowMonomials {
    Monomial u_gt, u_lt;
    Monomial v_gt, v_lt;
};
RowMonomials row_monomials(const FoldedSeed& fs, std::size_t row);

struct GroupMonomials {
    Monomial U_gt, U_lt;
    // Restricted to the F columns.
    Monomial V_gt, V_lt;
};

// Throws GroupCoherenceViolation when two members of group k disagree on
// their cluster monomials or on their F parts.
GroupMonomials group_monomials(const FoldedSeed& fs, std::size_t k);

// Rewriting modulo the coefficient ideal: placeholders expand to their
// symmetric sums and s<k>_<d_k>, t<k>_<d_k> are eliminated through the unit
// relations.
class QuotientContext {
public:
    explicit QuotientContext(FoldedTablePtr table);

    const FoldedTablePtr& folded_table() const { return table_; }
    LaurentPolynomial normal_form(const LaurentPolynomial& p) const;
    // Symmetric sum over subsets I of size r of group k of the product of t
    // over I and s over the complement, before rewriting.
    LaurentPolynomial symmetric_sum(std::size_t k, std::int64_t r) const;

private:
    FoldedTablePtr table_;
    std::vector<Monomial> elimination_;
    std::vector<std::optional<LaurentPolynomial>> expansion_;
    bool has_placeholders_ = false;
};

// Generalized coefficients as placeholders: entry r of group k is 1 for
// r = 0, d_k and otherwise the placeholder for r, or for d_k - r after an
// odd number of mutations of group k.
GeneralizedCoefficientTable placeholder_coefficients(const FoldedSeed& fs);

// Compares the normal forms of the product of the exchange binomials of
// group k with the sum over r of rho[k][r] (U_> V_>)^r (U_< V_<)^(d_k - r).
// rho must live on the folded table.
CheckResult product_formula_check(const FoldedSeed& fs, std::size_t k, const GeneralizedCoefficientTable& rho);
CheckResult product_formula_check(const FoldedSeed& fs, std::size_t k);

// The adjoined generalized seed with every inner coefficient replaced by
// its placeholder, and the substitution recovering the concrete seed.
struct FormalAdjoinedSeed {
    GeneralizedSeed seed;
    AdjoinedSeed concrete;
    // Images of the formal table's symbols in the concrete table.
    std::vector<Monomial> specialization;
};

FormalAdjoinedSeed formalize(const AdjoinedSeed& adjoined);
FormalAdjoinedSeed mutate_formal(const FormalAdjoinedSeed& formal, std::size_t k);
// Checks that substituting the generalized coefficients for the
// placeholders gives back the concrete seed.
CheckResult specialization_check(const FormalAdjoinedSeed& formal);

// Images of the formal symbols in the folded table: x_i goes to the product
// of the y's of group i, a root of f_j to F_j, a placeholder to itself.
std::vector<Monomial> embedding_images(const FormalAdjoinedSeed& formal, const FoldedTable& folded);

// Normal form of the product of the current cluster variables of group k.
// Throws CorrespondenceViolation when the two seeds were reached by
// different sequences.
LaurentPolynomial phi(const FormalAdjoinedSeed& formal, std::size_t k, const FoldedSeed& fs,
                      const QuotientContext& ctx);

// Conditions (i) to (iv) relating a formal adjoined seed and a folded seed
// reached by the same sequence.
CheckResult embedding_conditions(const FormalAdjoinedSeed& formal, const FoldedSeed& fs, const QuotientContext& ctx);

// Runs the adjoining construction, mutates both sides along seq and checks
// the conditions after every prefix.
CheckResult embedding_check(const GeneralizedSeed& gca, const std::vector<std::size_t>& seq,
                            AdjoinMode mode = AdjoinMode::total);

// Checks that every frozen variable lands on F_j^n (n the root exponent)
// and every initial cluster variable on its group product.
CheckResult subquotient_check(const GeneralizedSeed& gca, AdjoinMode mode = AdjoinMode::total);

}  // namespace gca
