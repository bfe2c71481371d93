// Generalized seeds of geometric type, their exchange polynomials and
// mutation, and the coefficient monomials f^[r], q_kr, p-hat_kr and the
// special monomials.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gca/laurent.hpp"
#include "gca/matrix.hpp"

namespace gca {

// strings[i][r] = p_{ir} for r = 0..d_i, each a monomial supported on
// frozen (or placeholder) symbols.
using CoefficientStrings = std::vector<std::vector<Monomial>>;

class GeneralizedSeed {
public:
    // The table must list exactly N cluster-role and M frozen-role symbols;
    // their table order fixes the matrix columns. Cluster variables start as
    // the cluster symbols themselves.
    static GeneralizedSeed initial(TablePtr table, ExtendedExchangeMatrix b, DivisorVector d,
                                   CoefficientStrings strings);
    // Strings with every entry equal to 1.
    static CoefficientStrings trivial_strings(const VariableTable& table, const DivisorVector& d);

    GeneralizedSeed(TablePtr table, std::vector<LaurentPolynomial> cluster, ExtendedExchangeMatrix b,
                    DivisorVector d, CoefficientStrings strings, std::vector<std::size_t> history = {});

    const TablePtr& table() const { return table_; }
    std::size_t N() const { return matrix_.N(); }
    std::size_t M() const { return matrix_.M(); }
    // Table index of the i-th initial cluster symbol and j-th frozen symbol.
    std::size_t cluster_symbol(std::size_t i) const { return cluster_vars_.at(i); }
    std::size_t frozen_symbol(std::size_t j) const { return frozen_vars_.at(j); }
    const std::vector<std::size_t>& cluster_symbols() const { return cluster_vars_; }
    const std::vector<std::size_t>& frozen_symbols() const { return frozen_vars_; }

    // Empty for a skeleton seed, which tracks only matrix and strings.
    const std::vector<LaurentPolynomial>& cluster() const { return cluster_; }
    bool has_cluster() const { return !cluster_.empty() || N() == 0; }
    const ExtendedExchangeMatrix& matrix() const { return matrix_; }
    const ModifiedExchangeMatrix& modified() const { return modified_; }
    const DivisorVector& divisors() const { return divisors_; }
    std::int64_t d(std::size_t k) const { return divisors_[k]; }
    const CoefficientStrings& strings() const { return strings_; }
    // Mutation directions applied since the initial seed.
    const std::vector<std::size_t>& history() const { return history_; }

    GeneralizedSeed skeleton() const;

    // Cluster, matrix, divisors and strings agree (history is ignored).
    bool same_data(const GeneralizedSeed& other) const;

private:
    TablePtr table_;
    std::vector<std::size_t> cluster_vars_;
    std::vector<std::size_t> frozen_vars_;
    std::vector<LaurentPolynomial> cluster_;
    ExtendedExchangeMatrix matrix_;
    ModifiedExchangeMatrix modified_;
    DivisorVector divisors_;
    CoefficientStrings strings_;
    std::vector<std::size_t> history_;
};

// Monomials attached to direction k. u_gt and u_lt have exponents on the
// cluster symbols, read as the current cluster of the seed; v_gt[r] and
// v_lt[r] are the stable monomials v^[r] for r = 0..d_k.
struct ExchangeContext {
    std::size_t k = 0;
    std::int64_t d = 1;
    Monomial u_gt;
    Monomial u_lt;
    std::vector<Monomial> v_gt;
    std::vector<Monomial> v_lt;
};

ExchangeContext exchange_context(const GeneralizedSeed& seed, std::size_t k);

// f_j^{floor(r |B-hat_kj| / d_k)}.
Monomial frozen_box(const GeneralizedSeed& seed, std::size_t j, std::int64_t r, std::size_t k);

// The d_k + 1 monomials p_kr u_>^r v_>^[r] u_<^(d-r) v_<^[d-r], in the
// current cluster read symbolically.
std::vector<Monomial> exchange_terms(const GeneralizedSeed& seed, std::size_t k);
// Exchange polynomial with the current cluster read symbolically.
LaurentPolynomial exchange_polynomial_formal(const GeneralizedSeed& seed, std::size_t k);
// Exchange polynomial expressed in the initial cluster and frozen symbols.
LaurentPolynomial exchange_polynomial(const GeneralizedSeed& seed, std::size_t k);

// Throws InexactDivision if the new cluster variable is not Laurent.
GeneralizedSeed mutate_seed(const GeneralizedSeed& seed, std::size_t k);
GeneralizedSeed mutate_seed_sequence(const GeneralizedSeed& seed, const std::vector<std::size_t>& seq);

// f_j^{n floor(r B-hat_kj / d_k) - floor(n r B-hat_kj / d_k)}, signed entries.
Monomial special_monomial(const GeneralizedSeed& seed, std::int64_t n, std::size_t j, std::size_t k, std::int64_t r);
Monomial q_monomial(const GeneralizedSeed& seed, std::size_t k, std::int64_t r);
// p_kr^{d_k} / q_kr.
Monomial p_hat(const GeneralizedSeed& seed, std::size_t k, std::int64_t r);
CheckResult root_formula_check(const GeneralizedSeed& seed, std::size_t k);

// u_> / u_< in the current cluster read symbolically.
Monomial tau_variable(const GeneralizedSeed& seed, std::size_t k);

}  // namespace gca
