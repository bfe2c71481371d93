#include "gca/seed.hpp"

#include <algorithm>

#include "gca/checked.hpp"

namespace gca {

using detail::floor_div;

namespace {

void check_direction(const GeneralizedSeed& seed, std::size_t k) {
    if (k >= seed.N())
        throw IndexOutOfRange("mutation direction " + std::to_string(k + 1) + " outside 1.." +
                              std::to_string(seed.N()));
}

void check_r(const GeneralizedSeed& seed, std::size_t k, std::int64_t r) {
    if (r < 0 || r > seed.d(k))
        throw IndexOutOfRange("r = " + std::to_string(r) + " outside 0.." + std::to_string(seed.d(k)));
}

}  // namespace

GeneralizedSeed GeneralizedSeed::initial(TablePtr table, ExtendedExchangeMatrix b, DivisorVector d,
                                         CoefficientStrings strings) {
    const auto clusters = table->indices_with_role(Role::cluster);
    std::vector<LaurentPolynomial> cluster;
    for (auto v : clusters) cluster.push_back(LaurentPolynomial::variable(table, v));
    return GeneralizedSeed(std::move(table), std::move(cluster), std::move(b), std::move(d), std::move(strings));
}

CoefficientStrings GeneralizedSeed::trivial_strings(const VariableTable& table, const DivisorVector& d) {
    CoefficientStrings s;
    for (std::size_t i = 0; i < d.size(); ++i)
        s.emplace_back(static_cast<std::size_t>(d[i] + 1), Monomial(table.size()));
    return s;
}

GeneralizedSeed::GeneralizedSeed(TablePtr table, std::vector<LaurentPolynomial> cluster, ExtendedExchangeMatrix b,
                                 DivisorVector d, CoefficientStrings strings, std::vector<std::size_t> history)
    : table_(std::move(table)),
      cluster_(std::move(cluster)),
      matrix_(std::move(b)),
      divisors_(std::move(d)),
      strings_(std::move(strings)),
      history_(std::move(history)) {
    cluster_vars_ = table_->indices_with_role(Role::cluster);
    frozen_vars_ = table_->indices_with_role(Role::frozen);
    if (cluster_vars_.size() != matrix_.N())
        throw ValidationError("table has " + std::to_string(cluster_vars_.size()) + " cluster symbols but N = " +
                              std::to_string(matrix_.N()));
    if (frozen_vars_.size() != matrix_.M())
        throw ValidationError("table has " + std::to_string(frozen_vars_.size()) + " frozen symbols but M = " +
                              std::to_string(matrix_.M()));
    diagonalizer(matrix_);
    modified_ = modify(matrix_, divisors_);
    if (!cluster_.empty() && cluster_.size() != matrix_.N())
        throw ValidationError("cluster size does not match the matrix");
    for (const auto& x : cluster_) {
        if (!same_table(x.table(), table_)) throw TableMismatch();
        if (x.is_zero()) throw ValidationError("cluster variables must be nonzero");
    }
    if (strings_.size() != matrix_.N()) throw ValidationError("one coefficient string per mutable index is required");
    for (std::size_t i = 0; i < strings_.size(); ++i) {
        if (strings_[i].size() != static_cast<std::size_t>(divisors_[i] + 1))
            throw ValidationError("string " + std::to_string(i + 1) + " must have d_i + 1 entries");
        for (const auto& p : strings_[i]) require_frozen_support(*table_, p);
        if (!strings_[i].front().is_one() || !strings_[i].back().is_one())
            throw ValidationError("string " + std::to_string(i + 1) + " must start and end with 1");
    }
}

GeneralizedSeed GeneralizedSeed::skeleton() const {
    return GeneralizedSeed(table_, {}, matrix_, divisors_, strings_, history_);
}

bool GeneralizedSeed::same_data(const GeneralizedSeed& other) const {
    return same_table(table_, other.table_) && cluster_ == other.cluster_ && matrix_ == other.matrix_ &&
           divisors_ == other.divisors_ && strings_ == other.strings_;
}

ExchangeContext exchange_context(const GeneralizedSeed& seed, std::size_t k) {
    check_direction(seed, k);
    const auto& bh = seed.modified();
    const std::size_t V = seed.table()->size();
    ExchangeContext ctx;
    ctx.k = k;
    ctx.d = seed.d(k);
    ctx.u_gt = Monomial(V);
    ctx.u_lt = Monomial(V);
    for (std::size_t i = 0; i < seed.N(); ++i) {
        const auto b = bh(k, i);
        if (b > 0) ctx.u_gt[seed.cluster_symbol(i)] = detail::narrow_exponent(b);
        if (b < 0) ctx.u_lt[seed.cluster_symbol(i)] = detail::narrow_exponent(-b);
    }
    for (std::int64_t r = 0; r <= ctx.d; ++r) {
        Monomial gt(V), lt(V);
        for (std::size_t j = 0; j < seed.M(); ++j) {
            const auto b = bh(k, seed.N() + j);
            const auto e = floor_div(detail::checked_mul(r, b > 0 ? b : -b), ctx.d);
            if (b > 0) gt[seed.frozen_symbol(j)] = detail::narrow_exponent(e);
            if (b < 0) lt[seed.frozen_symbol(j)] = detail::narrow_exponent(e);
        }
        ctx.v_gt.push_back(std::move(gt));
        ctx.v_lt.push_back(std::move(lt));
    }
    return ctx;
}

Monomial frozen_box(const GeneralizedSeed& seed, std::size_t j, std::int64_t r, std::size_t k) {
    check_direction(seed, k);
    check_r(seed, k, r);
    if (j >= seed.M()) throw IndexOutOfRange("frozen index " + std::to_string(j + 1) + " out of range");
    const auto b = seed.modified()(k, seed.N() + j);
    const auto e = floor_div(detail::checked_mul(r, b > 0 ? b : -b), seed.d(k));
    return Monomial::unit(seed.table()->size(), seed.frozen_symbol(j), detail::narrow_exponent(e));
}

std::vector<Monomial> exchange_terms(const GeneralizedSeed& seed, std::size_t k) {
    const auto ctx = exchange_context(seed, k);
    std::vector<Monomial> terms;
    for (std::int64_t r = 0; r <= ctx.d; ++r) {
        Monomial t = seed.strings()[k][static_cast<std::size_t>(r)];
        t *= ctx.u_gt.pow(r);
        t *= ctx.v_gt[static_cast<std::size_t>(r)];
        t *= ctx.u_lt.pow(ctx.d - r);
        t *= ctx.v_lt[static_cast<std::size_t>(ctx.d - r)];
        terms.push_back(std::move(t));
    }
    return terms;
}

LaurentPolynomial exchange_polynomial_formal(const GeneralizedSeed& seed, std::size_t k) {
    std::vector<LaurentPolynomial::Term> terms;
    for (auto& m : exchange_terms(seed, k)) terms.push_back({std::move(m), Integer(1)});
    return LaurentPolynomial::from_terms(seed.table(), std::move(terms));
}

LaurentPolynomial exchange_polynomial(const GeneralizedSeed& seed, std::size_t k) {
    if (!seed.has_cluster()) throw ValidationError("exchange polynomial requested from a skeleton seed");
    const auto ctx = exchange_context(seed, k);
    const auto& table = seed.table();
    const auto& bh = seed.modified();
    LaurentPolynomial U_gt = LaurentPolynomial::constant(table, 1);
    LaurentPolynomial U_lt = LaurentPolynomial::constant(table, 1);
    for (std::size_t i = 0; i < seed.N(); ++i) {
        const auto b = bh(k, i);
        if (b > 0) U_gt = poly_mul(U_gt, poly_pow(seed.cluster()[i], b));
        if (b < 0) U_lt = poly_mul(U_lt, poly_pow(seed.cluster()[i], -b));
    }
    // powers_gt[r] = U_>^r, powers_lt[r] = U_<^r
    std::vector<LaurentPolynomial> powers_gt{LaurentPolynomial::constant(table, 1)};
    std::vector<LaurentPolynomial> powers_lt{LaurentPolynomial::constant(table, 1)};
    for (std::int64_t r = 1; r <= ctx.d; ++r) {
        powers_gt.push_back(poly_mul(powers_gt.back(), U_gt));
        powers_lt.push_back(poly_mul(powers_lt.back(), U_lt));
    }
    LaurentPolynomial theta(table);
    for (std::int64_t r = 0; r <= ctx.d; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        const auto ulr = static_cast<std::size_t>(ctx.d - r);
        Monomial coeff = seed.strings()[k][ur] * ctx.v_gt[ur] * ctx.v_lt[ulr];
        theta = poly_add(theta, poly_mul(poly_mul(powers_gt[ur], powers_lt[ulr]), coeff));
    }
    return theta;
}

GeneralizedSeed mutate_seed(const GeneralizedSeed& seed, std::size_t k) {
    check_direction(seed, k);
    std::vector<LaurentPolynomial> cluster = seed.cluster();
    if (!cluster.empty()) {
        const auto theta = exchange_polynomial(seed, k);
        try {
            cluster[k] = poly_exact_div(theta, cluster[k]);
        } catch (const InexactDivision& e) {
            throw InexactDivision("mutation in direction " + std::to_string(k + 1) +
                                  " produced a non-Laurent cluster variable: " + e.what());
        }
    }
    CoefficientStrings strings = seed.strings();
    std::reverse(strings[k].begin(), strings[k].end());
    auto history = seed.history();
    history.push_back(k);
    return GeneralizedSeed(seed.table(), std::move(cluster), mutate(seed.matrix(), k), seed.divisors(),
                           std::move(strings), std::move(history));
}

GeneralizedSeed mutate_seed_sequence(const GeneralizedSeed& seed, const std::vector<std::size_t>& seq) {
    GeneralizedSeed cur = seed;
    for (auto k : seq) cur = mutate_seed(cur, k);
    return cur;
}

Monomial special_monomial(const GeneralizedSeed& seed, std::int64_t n, std::size_t j, std::size_t k, std::int64_t r) {
    check_direction(seed, k);
    check_r(seed, k, r);
    if (j >= seed.M()) throw IndexOutOfRange("frozen index " + std::to_string(j + 1) + " out of range");
    const auto b = seed.modified()(k, seed.N() + j);
    const auto dk = seed.d(k);
    const auto rb = detail::checked_mul(r, b);
    const auto e = detail::checked_mul(n, floor_div(rb, dk)) - floor_div(detail::checked_mul(n, rb), dk);
    return Monomial::unit(seed.table()->size(), seed.frozen_symbol(j), detail::narrow_exponent(e));
}

Monomial q_monomial(const GeneralizedSeed& seed, std::size_t k, std::int64_t r) {
    check_r(seed, k, r);
    const auto ctx = exchange_context(seed, k);
    const auto ur = static_cast<std::size_t>(r);
    const auto ulr = static_cast<std::size_t>(ctx.d - r);
    const Monomial& v_gt_full = ctx.v_gt[static_cast<std::size_t>(ctx.d)];
    const Monomial& v_lt_full = ctx.v_lt[static_cast<std::size_t>(ctx.d)];
    Monomial num = v_gt_full.pow(r) * v_lt_full.pow(ctx.d - r);
    Monomial den = (ctx.v_gt[ur] * ctx.v_lt[ulr]).pow(ctx.d);
    return num / den;
}

Monomial p_hat(const GeneralizedSeed& seed, std::size_t k, std::int64_t r) {
    return seed.strings()[k][static_cast<std::size_t>(r)].pow(seed.d(k)) / q_monomial(seed, k, r);
}

CheckResult root_formula_check(const GeneralizedSeed& seed, std::size_t k) {
    const auto ctx = exchange_context(seed, k);
    const std::size_t V = seed.table()->size();
    const auto terms = exchange_terms(seed, k);
    for (std::int64_t r = 0; r <= ctx.d; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        const auto ulr = static_cast<std::size_t>(ctx.d - r);
        const Monomial& p = seed.strings()[k][ur];
        // q must agree with the product of inverse special monomials.
        Monomial q_special(V);
        for (std::size_t j = 0; j < seed.M(); ++j) q_special *= special_monomial(seed, ctx.d, j, k, r).inverse();
        const Monomial q = q_monomial(seed, k, r);
        if (q != q_special)
            return CheckResult::fail("k=" + std::to_string(k + 1) + " r=" + std::to_string(r) +
                                     ": q differs from the inverse special monomials");
        const Monomial lhs = p_hat(seed, k, r) * ctx.v_gt[static_cast<std::size_t>(ctx.d)].pow(r) *
                             ctx.v_lt[static_cast<std::size_t>(ctx.d)].pow(ctx.d - r);
        const Monomial root = p * ctx.v_gt[ur] * ctx.v_lt[ulr];
        if (lhs != root.pow(ctx.d))
            return CheckResult::fail("k=" + std::to_string(k + 1) + " r=" + std::to_string(r) +
                                     ": p-hat v^r v^(d-r) is not the d-th power of p v^[r] v^[d-r]");
        // The root recovers the exchange term once the cluster part is added.
        const Monomial term = root * ctx.u_gt.pow(r) * ctx.u_lt.pow(ctx.d - r);
        if (term != terms[ur])
            return CheckResult::fail("k=" + std::to_string(k + 1) + " r=" + std::to_string(r) +
                                     ": root expansion does not reproduce the exchange term");
    }
    return CheckResult::pass();
}

Monomial tau_variable(const GeneralizedSeed& seed, std::size_t k) {
    const auto ctx = exchange_context(seed, k);
    return ctx.u_gt / ctx.u_lt;
}

}  // namespace gca
