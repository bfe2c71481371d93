#include "gca/root_adjoin.hpp"

#include "gca/checked.hpp"

namespace gca {

std::string_view adjoin_mode_name(AdjoinMode mode) { return mode == AdjoinMode::total ? "total" : "lcm"; }

AdjoinMode parse_adjoin_mode(std::string_view text) {
    if (text == "total") return AdjoinMode::total;
    if (text == "lcm") return AdjoinMode::lcm;
    throw InputError("adjoin mode must be 'total' or 'lcm', got '" + std::string(text) + "'");
}

std::int64_t adjoin_exponent(const DivisorVector& d, AdjoinMode mode) {
    return mode == AdjoinMode::total ? d.total_multiplicity() : d.lcm();
}

AdjoinedSeed::AdjoinedSeed(TablePtr base_table, GeneralizedSeed seed, std::vector<Monomial> phi,
                           std::vector<RootStep> steps)
    : base_table_(std::move(base_table)), seed_(std::move(seed)), phi_(std::move(phi)), steps_(std::move(steps)) {
    if (phi_.size() != base_table_->size()) throw ValidationError("phi needs one image per base symbol");
    for (const auto& m : phi_)
        if (m.size() != seed_.table()->size()) throw TableMismatch();
}

AdjoinedSeed AdjoinedSeed::with_seed(GeneralizedSeed seed) const {
    return AdjoinedSeed(base_table_, std::move(seed), phi_, steps_);
}

std::string root_symbol_name(const std::string& name, std::int64_t n) { return name + "_r" + std::to_string(n); }

namespace {

// One root-adjoining step on a plain seed. Returns the new seed and the
// images of the old table's symbols.
std::pair<GeneralizedSeed, std::vector<Monomial>> adjoin_once(const GeneralizedSeed& seed, std::size_t j,
                                                              std::int64_t n) {
    if (j >= seed.M()) throw IndexOutOfRange("frozen index " + std::to_string(j + 1) + " out of range");
    if (n < 1) throw InputError("root exponent must be positive");
    const auto& old_table = *seed.table();
    const std::size_t V = old_table.size();
    const std::size_t fj = seed.frozen_symbol(j);
    std::vector<Symbol> symbols = old_table.symbols();
    if (n != 1) symbols[fj].name = root_symbol_name(symbols[fj].name, n);
    TablePtr table = make_table(std::move(symbols));

    std::vector<Monomial> images;
    for (std::size_t v = 0; v < V; ++v)
        images.push_back(Monomial::unit(V, v, v == fj ? detail::narrow_exponent(n) : 1));

    std::vector<LaurentPolynomial> cluster;
    for (const auto& x : seed.cluster()) cluster.push_back(poly_map(x, table, images));

    IntMatrix b = seed.matrix().entries();
    for (std::size_t i = 0; i < seed.N(); ++i)
        b(i, seed.N() + j) = detail::checked_mul(b(i, seed.N() + j), n);

    // The special monomial is positional, so its exponent vector already
    // lives on the root symbol of the new table.
    CoefficientStrings strings;
    for (std::size_t k = 0; k < seed.N(); ++k) {
        std::vector<Monomial> row;
        for (std::int64_t r = 0; r <= seed.d(k); ++r)
            row.push_back(monomial_map(seed.strings()[k][static_cast<std::size_t>(r)], V, images) *
                          special_monomial(seed, n, j, k, r));
        strings.push_back(std::move(row));
    }
    GeneralizedSeed out(table, std::move(cluster), ExtendedExchangeMatrix(std::move(b), seed.N()), seed.divisors(),
                        std::move(strings), seed.history());
    return {std::move(out), std::move(images)};
}

}  // namespace

AdjoinedSeed adjoin_root(const GeneralizedSeed& seed, std::size_t j, std::int64_t n) {
    auto [out, images] = adjoin_once(seed, j, n);
    return AdjoinedSeed(seed.table(), std::move(out), std::move(images), {RootStep{j, n}});
}

AdjoinedSeed adjoin_root(const AdjoinedSeed& seed, std::size_t j, std::int64_t n) {
    auto [out, images] = adjoin_once(seed.seed(), j, n);
    std::vector<Monomial> composed;
    for (const auto& m : seed.phi_images()) composed.push_back(monomial_map(m, out.table()->size(), images));
    auto steps = seed.steps();
    steps.push_back(RootStep{j, n});
    return AdjoinedSeed(seed.base_table(), std::move(out), std::move(composed), std::move(steps));
}

AdjoinedSeed tau_tilde(const GeneralizedSeed& seed, AdjoinMode mode) {
    const std::int64_t n = adjoin_exponent(seed.divisors(), mode);
    const std::size_t V = seed.table()->size();
    std::vector<Monomial> identity;
    for (std::size_t v = 0; v < V; ++v) identity.push_back(Monomial::unit(V, v));
    AdjoinedSeed cur(seed.table(), seed, std::move(identity), {});
    for (std::size_t j = 0; j < seed.M(); ++j) cur = adjoin_root(cur, j, n);
    return cur;
}

LaurentPolynomial phi(const AdjoinedSeed& adjoined, const LaurentPolynomial& p) {
    if (!same_table(p.table(), adjoined.base_table())) throw TableMismatch();
    return poly_map(p, adjoined.seed().table(), adjoined.phi_images());
}

Monomial phi(const AdjoinedSeed& adjoined, const Monomial& m) {
    return monomial_map(m, adjoined.seed().table()->size(), adjoined.phi_images());
}

AdjoinedSeed mutate_adjoined(const AdjoinedSeed& adjoined, std::size_t k) {
    return adjoined.with_seed(mutate_seed(adjoined.seed(), k));
}

namespace {

CheckResult transport_at(const GeneralizedSeed& seed, const AdjoinedSeed& adj, std::size_t prefix) {
    const auto& bar = adj.seed();
    const auto where = " after " + std::to_string(prefix) + " mutations";
    for (std::size_t k = 0; k < seed.N(); ++k) {
        const auto ctx = exchange_context(seed, k);
        const auto bctx = exchange_context(bar, k);
        if (phi(adj, ctx.u_gt) != bctx.u_gt || phi(adj, ctx.u_lt) != bctx.u_lt)
            return CheckResult::fail("condition (i) fails for k=" + std::to_string(k + 1) + where);
        for (std::int64_t r = 0; r <= ctx.d; ++r) {
            const auto ur = static_cast<std::size_t>(r);
            const auto ulr = static_cast<std::size_t>(ctx.d - r);
            const Monomial lhs = phi(adj, seed.strings()[k][ur] * ctx.v_gt[ur] * ctx.v_lt[ulr]);
            const Monomial rhs = bar.strings()[k][ur] * bctx.v_gt[ur] * bctx.v_lt[ulr];
            if (lhs != rhs)
                return CheckResult::fail("condition (ii) fails for k=" + std::to_string(k + 1) +
                                         " r=" + std::to_string(r) + where);
        }
    }
    if (seed.has_cluster() && bar.has_cluster())
        for (std::size_t k = 0; k < seed.N(); ++k)
            if (phi(adj, seed.cluster()[k]) != bar.cluster()[k])
                return CheckResult::fail("condition (iii) fails for k=" + std::to_string(k + 1) + where);
    return CheckResult::pass();
}

}  // namespace

CheckResult transport_check(const GeneralizedSeed& seed, const AdjoinedSeed& adjoined,
                            const std::vector<std::size_t>& seq) {
    if (!same_table(seed.table(), adjoined.base_table())) throw TableMismatch();
    GeneralizedSeed cur = seed;
    AdjoinedSeed bar = adjoined;
    if (auto res = transport_at(cur, bar, 0); !res) return res;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        cur = mutate_seed(cur, seq[i]);
        bar = mutate_adjoined(bar, seq[i]);
        if (auto res = transport_at(cur, bar, i + 1); !res) return res;
    }
    return CheckResult::pass();
}

CheckResult homogeneity_check(const GeneralizedSeed& seed, std::size_t k) {
    const auto ctx = exchange_context(seed, k);
    const auto& table = *seed.table();
    for (std::int64_t r = 0; r <= ctx.d; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        if (ctx.v_gt[ur] != ctx.v_gt[1].pow(r) || ctx.v_lt[ur] != ctx.v_lt[1].pow(r)) {
            const auto terms = exchange_terms(seed, k);
            return CheckResult::fail("k=" + std::to_string(k + 1) + ": term " +
                                     monomial_to_string(table, terms[ur]) + " (r=" + std::to_string(r) +
                                     ") is not a product of powers of u_> v_>^[1] and u_< v_<^[1]");
        }
    }
    return CheckResult::pass();
}

std::vector<Monomial> eta_coefficients(const GeneralizedSeed& seed, std::size_t k) {
    if (auto res = homogeneity_check(seed, k); !res) throw HomogeneityFailure(res.detail);
    const auto ctx = exchange_context(seed, k);
    const Monomial h_gt = ctx.u_gt * ctx.v_gt[1];
    const Monomial h_lt = ctx.u_lt * ctx.v_lt[1];
    const auto terms = exchange_terms(seed, k);
    std::vector<Monomial> out;
    for (std::int64_t r = 0; r <= ctx.d; ++r)
        out.push_back(terms[static_cast<std::size_t>(r)] / (h_gt.pow(r) * h_lt.pow(ctx.d - r)));
    return out;
}

Monomial tau_variable(const AdjoinedSeed& adjoined, std::size_t k) {
    const auto& seed = adjoined.seed();
    if (auto res = homogeneity_check(seed, k); !res) throw HomogeneityFailure(res.detail);
    const auto ctx = exchange_context(seed, k);
    return (ctx.u_gt * ctx.v_gt[1]) / (ctx.u_lt * ctx.v_lt[1]);
}

GeneralizedCoefficientTable rho(const AdjoinedSeed& adjoined) {
    const auto& seed = adjoined.seed();
    GeneralizedCoefficientTable t{seed.table(), {}};
    for (std::size_t k = 0; k < seed.N(); ++k) t.rho.push_back(eta_coefficients(seed, k));
    return t;
}

GeneralizedCoefficientTable rho_formula(const GeneralizedSeed& seed, const AdjoinedSeed& adjoined) {
    if (!same_table(seed.table(), adjoined.base_table())) throw TableMismatch();
    std::int64_t n = 0;
    std::vector<bool> covered(seed.M(), false);
    for (const auto& step : adjoined.steps()) {
        if (n != 0 && step.n != n) throw InputError("rho_formula needs one common root exponent");
        n = step.n;
        if (covered.at(step.frozen)) throw InputError("rho_formula needs each frozen variable adjoined once");
        covered[step.frozen] = true;
    }
    for (bool c : covered)
        if (!c) throw InputError("rho_formula needs every frozen variable adjoined");
    // Without frozen variables every q is 1 and any common multiple works.
    if (n == 0) n = seed.divisors().lcm();
    GeneralizedCoefficientTable t{adjoined.seed().table(), {}};
    for (std::size_t k = 0; k < seed.N(); ++k) {
        if (n % seed.d(k) != 0) throw InputError("root exponent is not divisible by d_k");
        std::vector<Monomial> row;
        for (std::int64_t r = 0; r <= seed.d(k); ++r) {
            // q lives on the old frozen symbols; positions match the roots.
            const Monomial q = q_monomial(seed, k, r);
            row.push_back(phi(adjoined, seed.strings()[k][static_cast<std::size_t>(r)]) * q.pow(-(n / seed.d(k))));
        }
        t.rho.push_back(std::move(row));
    }
    return t;
}

}  // namespace gca
