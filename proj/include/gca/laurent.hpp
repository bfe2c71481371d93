// Exact sparse multivariate Laurent polynomials with arbitrary-precision
// integer coefficients, plus the tropical semifield of monomials.
//
// Every polynomial lives over a VariableTable. Terms are kept sorted in the
// canonical order: larger total degree first, ties broken lexicographically
// along the table order (a larger exponent on an earlier variable comes first).
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gca/errors.hpp"

namespace gca {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int32_t;

enum class Role { cluster, frozen, t_aux, s_aux, placeholder };

std::string_view role_name(Role role);

struct Symbol {
    std::string name;
    Role role = Role::cluster;
    // Group and member indices (0-based) for symbols attached to a group,
    // -1 otherwise.
    int group = -1;
    int member = -1;
};

class VariableTable {
public:
    explicit VariableTable(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::optional<std::size_t> find(std::string_view name) const;
    // Throws UnknownSymbol.
    std::size_t index_of(std::string_view name) const;
    // Indices of all symbols with the given role, in table order.
    std::vector<std::size_t> indices_with_role(Role role) const;

    bool operator==(const VariableTable& other) const;

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<Symbol> symbols);
bool same_table(const TablePtr& a, const TablePtr& b);

// Exponent vector indexed by table position.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t size) : exps_(size, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t size, std::size_t var, Exponent e = 1);

    std::size_t size() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    bool is_one() const;
    std::int64_t degree() const;

    Monomial operator*(const Monomial& other) const;
    Monomial operator/(const Monomial& other) const;
    Monomial& operator*=(const Monomial& other);
    Monomial inverse() const;
    Monomial pow(std::int64_t e) const;
    // True when every exponent of *this is at least the matching one of other.
    bool divisible_by(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// Strict canonical order: true when a precedes b.
bool canonical_before(const Monomial& a, const Monomial& b);

std::string monomial_to_string(const VariableTable& table, const Monomial& m);

// Tropical semifield on monomials supported on frozen-like roles
// (frozen and placeholder). Throws NonFrozenSupport otherwise.
Monomial tropical_add(const VariableTable& table, const Monomial& a, const Monomial& b);
Monomial tropical_mul(const VariableTable& table, const Monomial& a, const Monomial& b);
void require_frozen_support(const VariableTable& table, const Monomial& m);

class LaurentPolynomial {
public:
    struct Term {
        Monomial monomial;
        Integer coefficient;
    };

    explicit LaurentPolynomial(TablePtr table);

    static LaurentPolynomial constant(TablePtr table, const Integer& c);
    static LaurentPolynomial variable(TablePtr table, std::size_t var);
    static LaurentPolynomial variable(TablePtr table, std::string_view name);
    static LaurentPolynomial from_monomial(TablePtr table, Monomial m, const Integer& c = 1);
    // Combines like terms, drops zeros and sorts.
    static LaurentPolynomial from_terms(TablePtr table, std::vector<Term> terms);

    const TablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;

    bool operator==(const LaurentPolynomial& other) const;
    bool operator!=(const LaurentPolynomial& other) const { return !(*this == other); }

    // Componentwise minimum and maximum exponents over the support.
    Monomial min_exponents() const;
    Monomial max_exponents() const;

private:
    friend class PolynomialBuilder;
    TablePtr table_;
    std::vector<Term> terms_;
};

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial poly_sub(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial poly_neg(const LaurentPolynomial& a);
LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial poly_mul(const LaurentPolynomial& a, const Monomial& m, const Integer& c = 1);
LaurentPolynomial poly_pow(const LaurentPolynomial& a, std::int64_t e);
// Throws InexactDivision when d does not divide n in the Laurent ring.
LaurentPolynomial poly_exact_div(const LaurentPolynomial& n, const LaurentPolynomial& d);
// Ring homomorphism fixing every symbol except v, which maps to m.
LaurentPolynomial poly_substitute(const LaurentPolynomial& p, std::string_view v, const Monomial& m);
// Ring homomorphism into another table; images[i] is the image of symbol i.
LaurentPolynomial poly_map(const LaurentPolynomial& p, const TablePtr& target,
                           const std::vector<Monomial>& images);
Monomial monomial_map(const Monomial& m, std::size_t target_size, const std::vector<Monomial>& images);
// Ring homomorphism within the same table where some symbols map to
// polynomials. A symbol with a polynomial image must occur with non-negative
// exponents only; std::nullopt keeps the symbol fixed.
LaurentPolynomial poly_compose(const LaurentPolynomial& p,
                               const std::vector<std::optional<LaurentPolynomial>>& images);

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

std::string to_string(const LaurentPolynomial& p);
// Accepts the canonical text form and any reordering of it. Grammar:
//   poly   := ["-"] term { ("+" | "-") term } | "0"
//   term   := factor { "*" factor }
//   factor := integer | name [ "^" ["-"] integer ]
LaurentPolynomial parse_polynomial(const TablePtr& table, std::string_view text);
Monomial parse_monomial(const TablePtr& table, std::string_view text);

}  // namespace gca
