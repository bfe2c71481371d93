#include "gca/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "gca/checked.hpp"

namespace gca {

std::string_view role_name(Role role) {
    switch (role) {
        case Role::cluster: return "cluster";
        case Role::frozen: return "frozen";
        case Role::t_aux: return "t-aux";
        case Role::s_aux: return "s-aux";
        case Role::placeholder: return "placeholder";
    }
    return "unknown";
}

VariableTable::VariableTable(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& name = symbols_[i].name;
        if (name.empty()) throw ValidationError("empty symbol name");
        if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            throw ValidationError("symbol '" + name + "' must start with a letter or underscore");
        for (char ch : name)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw ValidationError("symbol '" + name + "' contains an invalid character");
        if (!by_name_.emplace(name, i).second) throw ValidationError("duplicate symbol '" + name + "'");
    }
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::size_t VariableTable::index_of(std::string_view name) const {
    auto idx = find(name);
    if (!idx) throw UnknownSymbol(std::string(name));
    return *idx;
}

std::vector<std::size_t> VariableTable::indices_with_role(Role role) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].role == role) out.push_back(i);
    return out;
}

bool VariableTable::operator==(const VariableTable& other) const {
    if (symbols_.size() != other.symbols_.size()) return false;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& a = symbols_[i];
        const auto& b = other.symbols_[i];
        if (a.name != b.name || a.role != b.role || a.group != b.group || a.member != b.member) return false;
    }
    return true;
}

TablePtr make_table(std::vector<Symbol> symbols) {
    return std::make_shared<const VariableTable>(std::move(symbols));
}

bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(std::size_t size, std::size_t var, Exponent e) {
    Monomial m(size);
    m.exps_.at(var) = e;
    return m;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

Monomial& Monomial::operator*=(const Monomial& other) {
    if (exps_.size() != other.exps_.size()) throw TableMismatch();
    for (std::size_t i = 0; i < exps_.size(); ++i)
        exps_[i] = detail::narrow_exponent(std::int64_t{exps_[i]} + other.exps_[i]);
    return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    r *= other;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const { return *this * other.inverse(); }

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& e : r.exps_) e = detail::narrow_exponent(-std::int64_t{e});
    return r;
}

Monomial Monomial::pow(std::int64_t k) const {
    Monomial r = *this;
    for (auto& e : r.exps_) e = detail::narrow_exponent(detail::checked_mul(e, k));
    return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
    if (exps_.size() != other.exps_.size()) throw TableMismatch();
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] < other.exps_[i]) return false;
    return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
        h ^= static_cast<std::uint32_t>(e);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

bool canonical_before(const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::string monomial_to_string(const VariableTable& table, const Monomial& m) {
    if (m.size() != table.size()) throw TableMismatch();
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += table.symbol(i).name;
        if (m[i] != 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

void require_frozen_support(const VariableTable& table, const Monomial& m) {
    if (m.size() != table.size()) throw TableMismatch();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        const Role r = table.symbol(i).role;
        if (r != Role::frozen && r != Role::placeholder)
            throw NonFrozenSupport("symbol '" + table.symbol(i).name + "' with role " +
                                   std::string(role_name(r)) + " has a nonzero exponent");
    }
}

Monomial tropical_add(const VariableTable& table, const Monomial& a, const Monomial& b) {
    require_frozen_support(table, a);
    require_frozen_support(table, b);
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial tropical_mul(const VariableTable& table, const Monomial& a, const Monomial& b) {
    require_frozen_support(table, a);
    require_frozen_support(table, b);
    return a * b;
}

// -------------------------------------------------------- LaurentPolynomial

namespace {

using Accumulator = std::unordered_map<Monomial, Integer, MonomialHash>;

void sort_terms(std::vector<LaurentPolynomial::Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return canonical_before(x.monomial, y.monomial);
    });
}

std::vector<LaurentPolynomial::Term> drain(Accumulator& acc) {
    std::vector<LaurentPolynomial::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    sort_terms(terms);
    return terms;
}

void check_tables(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (!same_table(a.table(), b.table())) throw TableMismatch();
}

}  // namespace

class PolynomialBuilder {
public:
    static LaurentPolynomial make(TablePtr table, std::vector<LaurentPolynomial::Term> sorted_terms) {
        LaurentPolynomial p(std::move(table));
        p.terms_ = std::move(sorted_terms);
        return p;
    }
};

LaurentPolynomial::LaurentPolynomial(TablePtr table) : table_(std::move(table)) {
    if (!table_) throw ValidationError("null variable table");
}

LaurentPolynomial LaurentPolynomial::constant(TablePtr table, const Integer& c) {
    const std::size_t n = table->size();
    return from_monomial(std::move(table), Monomial(n), c);
}

LaurentPolynomial LaurentPolynomial::variable(TablePtr table, std::size_t var) {
    if (var >= table->size()) throw IndexOutOfRange("variable index " + std::to_string(var) + " out of range");
    const std::size_t n = table->size();
    return from_monomial(std::move(table), Monomial::unit(n, var));
}

LaurentPolynomial LaurentPolynomial::variable(TablePtr table, std::string_view name) {
    const std::size_t var = table->index_of(name);
    return variable(std::move(table), var);
}

LaurentPolynomial LaurentPolynomial::from_monomial(TablePtr table, Monomial m, const Integer& c) {
    if (m.size() != table->size()) throw TableMismatch();
    LaurentPolynomial p(std::move(table));
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(TablePtr table, std::vector<Term> terms) {
    Accumulator acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        if (t.monomial.size() != table->size()) throw TableMismatch();
        acc[std::move(t.monomial)] += t.coefficient;
    }
    return PolynomialBuilder::make(std::move(table), drain(acc));
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].coefficient == 1 && terms_[0].monomial.is_one();
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const {
    if (!same_table(table_, other.table_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].monomial != other.terms_[i].monomial || terms_[i].coefficient != other.terms_[i].coefficient)
            return false;
    return true;
}

Monomial LaurentPolynomial::min_exponents() const {
    Monomial r(table_->size());
    if (terms_.empty()) return r;
    r = terms_[0].monomial;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], t.monomial[i]);
    return r;
}

Monomial LaurentPolynomial::max_exponents() const {
    Monomial r(table_->size());
    if (terms_.empty()) return r;
    r = terms_[0].monomial;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], t.monomial[i]);
    return r;
}

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    check_tables(a, b);
    // Both inputs are sorted, so a merge keeps the canonical order.
    std::vector<LaurentPolynomial::Term> out;
    out.reserve(a.size() + b.size());
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && canonical_before(x[i].monomial, y[j].monomial))) {
            out.push_back(x[i++]);
        } else if (i == x.size() || canonical_before(y[j].monomial, x[i].monomial)) {
            out.push_back(y[j++]);
        } else {
            Integer c = x[i].coefficient + y[j].coefficient;
            if (!c.is_zero()) out.push_back({x[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return PolynomialBuilder::make(a.table(), std::move(out));
}

LaurentPolynomial poly_neg(const LaurentPolynomial& a) {
    auto terms = a.terms();
    for (auto& t : terms) t.coefficient = -t.coefficient;
    return PolynomialBuilder::make(a.table(), std::move(terms));
}

LaurentPolynomial poly_sub(const LaurentPolynomial& a, const LaurentPolynomial& b) { return poly_add(a, poly_neg(b)); }

LaurentPolynomial poly_mul(const LaurentPolynomial& a, const Monomial& m, const Integer& c) {
    if (m.size() != a.table()->size()) throw TableMismatch();
    if (c.is_zero()) return LaurentPolynomial(a.table());
    // Multiplying by a monomial is a translation, which preserves the order.
    auto terms = a.terms();
    for (auto& t : terms) {
        t.monomial *= m;
        t.coefficient *= c;
    }
    return PolynomialBuilder::make(a.table(), std::move(terms));
}

LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    check_tables(a, b);
    if (a.is_zero() || b.is_zero()) return LaurentPolynomial(a.table());
    if (a.is_monomial()) return poly_mul(b, a.terms()[0].monomial, a.terms()[0].coefficient);
    if (b.is_monomial()) return poly_mul(a, b.terms()[0].monomial, b.terms()[0].coefficient);
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    Accumulator acc;
    acc.reserve(big.size() * 2);
    const std::size_t n = a.table()->size();
    Monomial key(n);
    Integer prod;
    for (const auto& s : small.terms()) {
        for (const auto& t : big.terms()) {
            for (std::size_t v = 0; v < n; ++v)
                key[v] = detail::narrow_exponent(std::int64_t{s.monomial[v]} + t.monomial[v]);
            prod = s.coefficient * t.coefficient;
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, prod);
            else
                it->second += prod;
        }
    }
    return PolynomialBuilder::make(a.table(), drain(acc));
}

LaurentPolynomial poly_pow(const LaurentPolynomial& a, std::int64_t e) {
    if (e < 0) {
        if (!a.is_monomial() || abs(a.terms()[0].coefficient) != 1)
            throw InexactDivision("negative power of a non-unit polynomial");
        const auto& t = a.terms()[0];
        Integer c = (t.coefficient < 0 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
        return LaurentPolynomial::from_monomial(a.table(), t.monomial.pow(e), c);
    }
    LaurentPolynomial result = LaurentPolynomial::constant(a.table(), 1);
    LaurentPolynomial base = a;
    while (e > 0) {
        if (e & 1) result = poly_mul(result, base);
        e >>= 1;
        if (e > 0) base = poly_mul(base, base);
    }
    return result;
}

namespace {

struct LeadingFirst {
    bool operator()(const Monomial& x, const Monomial& y) const { return canonical_before(x, y); }
};

}  // namespace

LaurentPolynomial poly_exact_div(const LaurentPolynomial& n, const LaurentPolynomial& d) {
    check_tables(n, d);
    if (d.is_zero()) throw InexactDivision("division by the zero polynomial");
    const auto& table = n.table();
    if (n.is_zero()) return LaurentPolynomial(table);
    if (d.is_monomial()) {
        const auto& dt = d.terms()[0];
        const Monomial inv = dt.monomial.inverse();
        auto terms = n.terms();
        for (auto& t : terms) {
            Integer q, r;
            boost::multiprecision::divide_qr(t.coefficient, dt.coefficient, q, r);
            if (!r.is_zero()) throw InexactDivision("coefficient not divisible by the monomial divisor");
            t.coefficient = std::move(q);
            t.monomial *= inv;
        }
        return PolynomialBuilder::make(table, std::move(terms));
    }
    // Shift both operands into the polynomial ring with no monomial content.
    // A Laurent quotient then exists exactly when an ordinary polynomial
    // quotient exists, and graded-lex division terminates.
    const Monomial n_shift = n.min_exponents();
    const Monomial d_shift = d.min_exponents();
    const Monomial n_inv = n_shift.inverse();
    const Monomial d_inv = d_shift.inverse();
    std::map<Monomial, Integer, LeadingFirst> rem;
    for (const auto& t : n.terms()) rem.emplace_hint(rem.end(), t.monomial * n_inv, t.coefficient);
    std::vector<LaurentPolynomial::Term> divisor;
    divisor.reserve(d.size());
    for (const auto& t : d.terms()) divisor.push_back({t.monomial * d_inv, t.coefficient});
    const Monomial& lead_m = divisor[0].monomial;
    const Integer& lead_c = divisor[0].coefficient;

    std::vector<LaurentPolynomial::Term> quotient;
    Monomial key(table->size());
    Integer q_c, r_c;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!top->first.divisible_by(lead_m))
            throw InexactDivision("leading term of the remainder is not divisible by the divisor's leading term");
        boost::multiprecision::divide_qr(top->second, lead_c, q_c, r_c);
        if (!r_c.is_zero()) throw InexactDivision("leading coefficient of the remainder is not divisible");
        Monomial q_m = top->first / lead_m;
        rem.erase(top);
        for (std::size_t i = 1; i < divisor.size(); ++i) {
            const auto& dt = divisor[i];
            for (std::size_t v = 0; v < key.size(); ++v)
                key[v] = detail::narrow_exponent(std::int64_t{q_m[v]} + dt.monomial[v]);
            auto it = rem.find(key);
            if (it == rem.end()) {
                rem.emplace(key, -(q_c * dt.coefficient));
            } else {
                it->second -= q_c * dt.coefficient;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        quotient.push_back({std::move(q_m), q_c});
    }
    // Quotient terms were produced in strictly decreasing order.
    LaurentPolynomial q = PolynomialBuilder::make(table, std::move(quotient));
    return poly_mul(q, n_shift * d_inv);
}

Monomial monomial_map(const Monomial& m, std::size_t target_size, const std::vector<Monomial>& images) {
    if (images.size() != m.size()) throw TableMismatch();
    std::vector<std::int64_t> acc(target_size, 0);
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        const auto& img = images[v];
        if (img.size() != target_size) throw TableMismatch();
        for (std::size_t w = 0; w < target_size; ++w)
            if (img[w] != 0) acc[w] = detail::checked_add(acc[w], detail::checked_mul(m[v], img[w]));
    }
    Monomial out(target_size);
    for (std::size_t w = 0; w < target_size; ++w) out[w] = detail::narrow_exponent(acc[w]);
    return out;
}

LaurentPolynomial poly_map(const LaurentPolynomial& p, const TablePtr& target, const std::vector<Monomial>& images) {
    if (images.size() != p.table()->size()) throw TableMismatch();
    std::vector<LaurentPolynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back({monomial_map(t.monomial, target->size(), images), t.coefficient});
    return LaurentPolynomial::from_terms(target, std::move(terms));
}

LaurentPolynomial poly_substitute(const LaurentPolynomial& p, std::string_view v, const Monomial& m) {
    const auto& table = p.table();
    const std::size_t var = table->index_of(v);
    if (m.size() != table->size()) throw TableMismatch();
    std::vector<Monomial> images;
    images.reserve(table->size());
    for (std::size_t i = 0; i < table->size(); ++i) images.push_back(i == var ? m : Monomial::unit(table->size(), i));
    return poly_map(p, table, images);
}

LaurentPolynomial poly_compose(const LaurentPolynomial& p, const std::vector<std::optional<LaurentPolynomial>>& images) {
    const auto& table = p.table();
    if (images.size() != table->size()) throw TableMismatch();
    for (const auto& img : images)
        if (img && !same_table(img->table(), table)) throw TableMismatch();
    // Group terms by the exponents they carry on substituted symbols so each
    // distinct power product is expanded once.
    std::map<std::vector<Exponent>, std::vector<LaurentPolynomial::Term>> groups;
    for (const auto& t : p.terms()) {
        std::vector<Exponent> key(table->size(), 0);
        Monomial rest = t.monomial;
        for (std::size_t v = 0; v < table->size(); ++v) {
            if (!images[v] || t.monomial[v] == 0) continue;
            if (t.monomial[v] < 0)
                throw InexactDivision("negative power of symbol '" + table->symbol(v).name +
                                      "' cannot be replaced by a polynomial");
            key[v] = t.monomial[v];
            rest[v] = 0;
        }
        groups[key].push_back({std::move(rest), t.coefficient});
    }
    std::map<std::pair<std::size_t, Exponent>, LaurentPolynomial> power_cache;
    auto power = [&](std::size_t v, Exponent e) -> const LaurentPolynomial& {
        auto it = power_cache.find({v, e});
        if (it == power_cache.end()) it = power_cache.emplace(std::make_pair(v, e), poly_pow(*images[v], e)).first;
        return it->second;
    };
    LaurentPolynomial result(table);
    for (auto& [key, terms] : groups) {
        LaurentPolynomial factor = LaurentPolynomial::constant(table, 1);
        for (std::size_t v = 0; v < key.size(); ++v)
            if (key[v] != 0) factor = poly_mul(factor, power(v, key[v]));
        result = poly_add(result, poly_mul(factor, LaurentPolynomial::from_terms(table, std::move(terms))));
    }
    return result;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) { return poly_add(a, b); }
LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return poly_sub(a, b); }
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) { return poly_mul(a, b); }

// ------------------------------------------------------------ text forms

std::string to_string(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coefficient < 0;
        const Integer mag = negative ? Integer(-t.coefficient) : t.coefficient;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        const bool bare = t.monomial.is_one();
        if (bare) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << monomial_to_string(*p.table(), t.monomial);
        }
    }
    return out.str();
}

namespace {

class Parser {
public:
    Parser(const TablePtr& table, std::string_view text) : table_(table), text_(text) {}

    LaurentPolynomial polynomial() {
        std::vector<LaurentPolynomial::Term> terms;
        skip();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        terms.push_back(term(negative));
        for (;;) {
            skip();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return LaurentPolynomial::from_terms(table_, std::move(terms));
    }

    Monomial monomial_only() {
        auto t = term(false);
        skip();
        if (!at_end()) fail("trailing characters after monomial");
        if (t.coefficient != 1) fail("a monomial may not carry a coefficient");
        return t.monomial;
    }

private:
    LaurentPolynomial::Term term(bool negative) {
        LaurentPolynomial::Term t{Monomial(table_->size()), Integer(1)};
        factor(t);
        for (;;) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            factor(t);
        }
        if (negative) t.coefficient = -t.coefficient;
        return t;
    }

    void factor(LaurentPolynomial::Term& t) {
        skip();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coefficient *= Integer(digits());
            return;
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a number or a symbol");
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        const auto idx = table_->find(name);
        if (!idx) {
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        std::int64_t e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            }
            skip();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            e = std::stoll(digits());
            if (neg) e = -e;
        }
        t.monomial[*idx] = detail::narrow_exponent(std::int64_t{t.monomial[*idx]} + e);
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

    const TablePtr& table_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(const TablePtr& table, std::string_view text) {
    Parser parser(table, text);
    return parser.polynomial();
}

Monomial parse_monomial(const TablePtr& table, std::string_view text) {
    Parser parser(table, text);
    return parser.monomial_only();
}

}  // namespace gca
