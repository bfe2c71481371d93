#include "gca/quotient.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "gca/checked.hpp"

namespace gca {

std::string placeholder_name(std::size_t k, std::int64_t r) {
    return "rho" + std::to_string(k + 1) + "_" + std::to_string(r);
}

namespace {

std::string indexed(const char* stem, std::size_t k, std::size_t a) {
    return stem + std::to_string(k + 1) + "_" + std::to_string(a + 1);
}

std::string where(std::size_t prefix) { return " after " + std::to_string(prefix) + " mutations"; }

}  // namespace

FoldedTablePtr make_folded_table(const GeneralizedSeed& gca) {
    auto out = std::make_shared<FoldedTable>();
    out->layout = GroupLayout(gca.divisors(), gca.M());
    const auto& layout = out->layout;

    std::vector<Symbol> symbols(layout.cols());
    std::set<std::string> used;
    for (std::size_t k = 0; k < layout.N(); ++k)
        for (std::size_t a = 0; a < layout.size(k); ++a) {
            const int g = static_cast<int>(k), m = static_cast<int>(a);
            symbols[layout.principal_col(k, a)] = Symbol{indexed("y", k, a), Role::cluster, g, m};
            symbols[layout.t_col(k, a)] = Symbol{indexed("t", k, a), Role::t_aux, g, m};
            symbols[layout.s_col(k, a)] = Symbol{indexed("s", k, a), Role::s_aux, g, m};
        }
    std::vector<Symbol> placeholders;
    for (std::size_t k = 0; k < layout.N(); ++k)
        for (std::int64_t r = 1; r < gca.d(k); ++r)
            placeholders.push_back(Symbol{placeholder_name(k, r), Role::placeholder, static_cast<int>(k),
                                          static_cast<int>(r)});
    for (const auto& s : symbols)
        if (!s.name.empty()) used.insert(s.name);
    for (const auto& s : placeholders) used.insert(s.name);
    for (std::size_t j = 0; j < gca.M(); ++j) {
        const std::string& base = gca.table()->symbol(gca.frozen_symbol(j)).name;
        std::string name = base;
        name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        if (used.count(name)) name = "F_" + base;
        used.insert(name);
        symbols[layout.frozen_col(j)] = Symbol{name, Role::frozen, -1, -1};
    }
    for (std::size_t c = 0; c < symbols.size(); ++c) out->column_symbol.push_back(c);
    for (std::size_t j = 0; j < gca.M(); ++j) out->frozen_symbol.push_back(layout.frozen_col(j));

    out->placeholder.resize(layout.N());
    std::size_t next = symbols.size();
    for (std::size_t k = 0; k < layout.N(); ++k) {
        out->placeholder[k].assign(layout.size(k) + 1, FoldedTable::npos);
        for (std::int64_t r = 1; r < gca.d(k); ++r) out->placeholder[k][static_cast<std::size_t>(r)] = next++;
    }
    symbols.insert(symbols.end(), placeholders.begin(), placeholders.end());
    out->table = make_table(std::move(symbols));
    return out;
}

FoldedSeed::FoldedSeed(FoldedTablePtr table, FoldedMatrix matrix, std::vector<LaurentPolynomial> cluster)
    : table_(std::move(table)), matrix_(std::move(matrix)), cluster_(std::move(cluster)) {
    if (!(matrix_.layout() == table_->layout)) throw ValidationError("folded matrix does not match the folded table");
    if (!cluster_.empty() && cluster_.size() != table_->layout.rows())
        throw ValidationError("folded cluster size does not match the matrix");
    for (const auto& x : cluster_)
        if (!same_table(x.table(), table_->table)) throw TableMismatch();
}

FoldedSeed folded_initial_seed(const GeneralizedSeed& gca, AdjoinMode mode, bool with_cluster) {
    auto table = make_folded_table(gca);
    FoldedMatrix m = build(gca.matrix(), gca.divisors(), adjoin_exponent(gca.divisors(), mode));
    std::vector<LaurentPolynomial> cluster;
    if (with_cluster)
        for (std::size_t row = 0; row < table->layout.rows(); ++row)
            cluster.push_back(LaurentPolynomial::variable(table->table, table->column_symbol[row]));
    return FoldedSeed(std::move(table), std::move(m), std::move(cluster));
}

RowMonomials row_monomials(const FoldedSeed& fs, std::size_t row) {
    const auto& ft = *fs.folded_table();
    const std::size_t V = ft.table->size();
    const std::size_t R = ft.layout.rows();
    RowMonomials out{Monomial(V), Monomial(V), Monomial(V), Monomial(V)};
    for (std::size_t c = 0; c < ft.layout.cols(); ++c) {
        const auto b = fs.matrix()(row, c);
        if (b == 0) continue;
        const auto e = detail::narrow_exponent(b > 0 ? b : -b);
        Monomial& target = c < R ? (b > 0 ? out.u_gt : out.u_lt) : (b > 0 ? out.v_gt : out.v_lt);
        target[ft.column_symbol[c]] = e;
    }
    return out;
}

LaurentPolynomial folded_exchange_formal(const FoldedSeed& fs, std::size_t row) {
    const auto m = row_monomials(fs, row);
    return LaurentPolynomial::from_terms(fs.table(), {{m.u_gt * m.v_gt, Integer(1)}, {m.u_lt * m.v_lt, Integer(1)}});
}

namespace {

// The exchange binomial of a row with the current cluster variables
// substituted.
LaurentPolynomial expanded_exchange(const FoldedSeed& fs, std::size_t row) {
    const auto& ft = *fs.folded_table();
    const auto& table = ft.table;
    const auto m = row_monomials(fs, row);
    LaurentPolynomial gt = LaurentPolynomial::from_monomial(table, m.v_gt);
    LaurentPolynomial lt = LaurentPolynomial::from_monomial(table, m.v_lt);
    for (std::size_t c = 0; c < ft.layout.rows(); ++c) {
        const auto b = fs.matrix()(row, c);
        if (b > 0) gt = poly_mul(gt, poly_pow(fs.cluster()[c], b));
        if (b < 0) lt = poly_mul(lt, poly_pow(fs.cluster()[c], -b));
    }
    return poly_add(gt, lt);
}

}  // namespace

FoldedSeed group_mutate(const FoldedSeed& fs, std::size_t k) {
    FoldedMatrix m = group_mutate(fs.matrix(), k);
    std::vector<LaurentPolynomial> cluster = fs.cluster();
    if (fs.has_cluster()) {
        const auto& layout = fs.folded_table()->layout;
        // Rows of one group never see each other, so every exchange can be
        // read from the matrix before the group mutation.
        for (std::size_t a = 0; a < layout.size(k); ++a) {
            const std::size_t row = layout.row(k, a);
            try {
                cluster[row] = poly_exact_div(expanded_exchange(fs, row), fs.cluster()[row]);
            } catch (const InexactDivision& e) {
                throw InexactDivision("group mutation " + std::to_string(k + 1) + " produced a non-Laurent variable: " +
                                      e.what());
            }
        }
    }
    return FoldedSeed(fs.folded_table(), std::move(m), std::move(cluster));
}

FoldedSeed group_mutate_sequence(const FoldedSeed& fs, const std::vector<std::size_t>& seq) {
    FoldedSeed cur = fs;
    for (auto k : seq) cur = group_mutate(cur, k);
    return cur;
}

GroupMonomials group_monomials(const FoldedSeed& fs, std::size_t k) {
    const auto& ft = *fs.folded_table();
    if (k >= ft.layout.N()) throw IndexOutOfRange("group " + std::to_string(k + 1) + " out of range");
    auto f_part = [&](const Monomial& m) {
        Monomial out(m.size());
        for (auto v : ft.frozen_symbol) out[v] = m[v];
        return out;
    };
    const auto first = row_monomials(fs, ft.layout.row(k, 0));
    GroupMonomials g{first.u_gt, first.u_lt, f_part(first.v_gt), f_part(first.v_lt)};
    for (std::size_t a = 1; a < ft.layout.size(k); ++a) {
        const auto other = row_monomials(fs, ft.layout.row(k, a));
        if (other.u_gt != g.U_gt || other.u_lt != g.U_lt)
            throw GroupCoherenceViolation("members 1 and " + std::to_string(a + 1) + " of group " +
                                          std::to_string(k + 1) + " have different cluster monomials");
        if (f_part(other.v_gt) != g.V_gt || f_part(other.v_lt) != g.V_lt)
            throw GroupCoherenceViolation("members 1 and " + std::to_string(a + 1) + " of group " +
                                          std::to_string(k + 1) + " have different frozen parts");
    }
    return g;
}

QuotientContext::QuotientContext(FoldedTablePtr table) : table_(std::move(table)) {
    const auto& ft = *table_;
    const std::size_t V = ft.table->size();
    for (std::size_t v = 0; v < V; ++v) elimination_.push_back(Monomial::unit(V, v));
    for (std::size_t k = 0; k < ft.layout.N(); ++k) {
        const std::size_t d = ft.layout.size(k);
        Monomial t_last(V), s_last(V);
        for (std::size_t a = 0; a + 1 < d; ++a) {
            t_last[ft.t(k, a)] = -1;
            s_last[ft.s(k, a)] = -1;
        }
        elimination_[ft.t(k, d - 1)] = t_last;
        elimination_[ft.s(k, d - 1)] = s_last;
    }
    expansion_.assign(V, std::nullopt);
    for (std::size_t k = 0; k < ft.layout.N(); ++k)
        for (std::size_t r = 1; r < ft.layout.size(k); ++r) {
            expansion_[ft.placeholder[k][r]] =
                poly_map(symmetric_sum(k, static_cast<std::int64_t>(r)), ft.table, elimination_);
            has_placeholders_ = true;
        }
}

LaurentPolynomial QuotientContext::symmetric_sum(std::size_t k, std::int64_t r) const {
    const auto& ft = *table_;
    const std::size_t d = ft.layout.size(k);
    const std::size_t V = ft.table->size();
    std::vector<LaurentPolynomial::Term> terms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        if (static_cast<std::int64_t>(__builtin_popcountll(mask)) != r) continue;
        Monomial m(V);
        for (std::size_t a = 0; a < d; ++a) m[(mask >> a) & 1 ? ft.t(k, a) : ft.s(k, a)] = 1;
        terms.push_back({std::move(m), Integer(1)});
    }
    return LaurentPolynomial::from_terms(ft.table, std::move(terms));
}

LaurentPolynomial QuotientContext::normal_form(const LaurentPolynomial& p) const {
    if (!same_table(p.table(), table_->table)) throw TableMismatch();
    LaurentPolynomial q = poly_map(p, table_->table, elimination_);
    if (!has_placeholders_) return q;
    bool any = false;
    for (const auto& t : q.terms())
        for (std::size_t v = 0; v < expansion_.size() && !any; ++v)
            if (expansion_[v] && t.monomial[v] != 0) any = true;
    return any ? poly_compose(q, expansion_) : q;
}

GeneralizedCoefficientTable placeholder_coefficients(const FoldedSeed& fs) {
    const auto& ft = *fs.folded_table();
    const std::size_t V = ft.table->size();
    GeneralizedCoefficientTable out{ft.table, {}};
    for (std::size_t k = 0; k < ft.layout.N(); ++k) {
        const std::size_t d = ft.layout.size(k);
        const bool odd = fs.matrix().times_mutated(k) % 2 == 1;
        std::vector<Monomial> row;
        for (std::size_t r = 0; r <= d; ++r) {
            if (r == 0 || r == d) {
                row.emplace_back(V);
                continue;
            }
            row.push_back(Monomial::unit(V, ft.placeholder[k][odd ? d - r : r]));
        }
        out.rho.push_back(std::move(row));
    }
    return out;
}

CheckResult product_formula_check(const FoldedSeed& fs, std::size_t k, const GeneralizedCoefficientTable& rho) {
    const auto& ft = *fs.folded_table();
    if (!same_table(rho.table, ft.table)) throw TableMismatch();
    if (k >= ft.layout.N()) throw IndexOutOfRange("group " + std::to_string(k + 1) + " out of range");
    const QuotientContext ctx(fs.folded_table());
    const std::int64_t d = static_cast<std::int64_t>(ft.layout.size(k));
    GroupMonomials g;
    try {
        g = group_monomials(fs, k);
    } catch (const GroupCoherenceViolation& e) {
        return CheckResult::fail(e.what());
    }
    LaurentPolynomial lhs = LaurentPolynomial::constant(ft.table, 1);
    for (std::size_t a = 0; a < ft.layout.size(k); ++a)
        lhs = poly_mul(lhs, folded_exchange_formal(fs, ft.layout.row(k, a)));
    const Monomial h_gt = g.U_gt * g.V_gt;
    const Monomial h_lt = g.U_lt * g.V_lt;
    std::vector<LaurentPolynomial::Term> terms;
    for (std::int64_t r = 0; r <= d; ++r)
        terms.push_back({rho.rho.at(k).at(static_cast<std::size_t>(r)) * h_gt.pow(r) * h_lt.pow(d - r), Integer(1)});
    const auto rhs = LaurentPolynomial::from_terms(ft.table, std::move(terms));
    const auto residual = poly_sub(ctx.normal_form(lhs), ctx.normal_form(rhs));
    if (!residual.is_zero())
        return CheckResult::fail("product formula fails for group " + std::to_string(k + 1) +
                                 ": nonzero residual " + to_string(residual));
    return CheckResult::pass();
}

CheckResult product_formula_check(const FoldedSeed& fs, std::size_t k) {
    return product_formula_check(fs, k, placeholder_coefficients(fs));
}

FormalAdjoinedSeed formalize(const AdjoinedSeed& adjoined) {
    const auto& concrete = adjoined.seed();
    const auto& ctable = concrete.table();
    const std::size_t Vc = ctable->size();
    std::vector<Symbol> symbols = ctable->symbols();
    std::vector<std::vector<std::size_t>> slot(concrete.N());
    for (std::size_t k = 0; k < concrete.N(); ++k) {
        slot[k].assign(static_cast<std::size_t>(concrete.d(k)) + 1, FoldedTable::npos);
        for (std::int64_t r = 1; r < concrete.d(k); ++r) {
            slot[k][static_cast<std::size_t>(r)] = symbols.size();
            symbols.push_back(
                Symbol{placeholder_name(k, r), Role::placeholder, static_cast<int>(k), static_cast<int>(r)});
        }
    }
    TablePtr table = make_table(std::move(symbols));
    const std::size_t V = table->size();

    std::vector<Monomial> widen;
    for (std::size_t v = 0; v < Vc; ++v) widen.push_back(Monomial::unit(V, v));
    std::vector<Monomial> specialization;
    for (std::size_t v = 0; v < Vc; ++v) specialization.push_back(Monomial::unit(Vc, v));
    specialization.resize(V, Monomial(Vc));

    CoefficientStrings strings;
    for (std::size_t k = 0; k < concrete.N(); ++k) {
        const std::int64_t d = concrete.d(k);
        const bool odd = std::count(concrete.history().begin(), concrete.history().end(), k) % 2 == 1;
        std::vector<Monomial> row;
        for (std::int64_t r = 0; r <= d; ++r) {
            if (r == 0 || r == d) {
                row.emplace_back(V);
                continue;
            }
            const auto label = static_cast<std::size_t>(odd ? d - r : r);
            row.push_back(Monomial::unit(V, slot[k][label]));
            specialization[slot[k][label]] = concrete.strings()[k][static_cast<std::size_t>(r)];
        }
        strings.push_back(std::move(row));
    }
    std::vector<LaurentPolynomial> cluster;
    for (const auto& x : concrete.cluster()) cluster.push_back(poly_map(x, table, widen));
    GeneralizedSeed seed(table, std::move(cluster), concrete.matrix(), concrete.divisors(), std::move(strings),
                         concrete.history());
    return FormalAdjoinedSeed{std::move(seed), adjoined, std::move(specialization)};
}

FormalAdjoinedSeed mutate_formal(const FormalAdjoinedSeed& formal, std::size_t k) {
    return FormalAdjoinedSeed{mutate_seed(formal.seed, k), mutate_adjoined(formal.concrete, k),
                              formal.specialization};
}

CheckResult specialization_check(const FormalAdjoinedSeed& formal) {
    const auto& concrete = formal.concrete.seed();
    const auto& ctable = concrete.table();
    if (!(formal.seed.matrix() == concrete.matrix())) return CheckResult::fail("formal and concrete matrices differ");
    for (std::size_t k = 0; k < concrete.N(); ++k)
        for (std::size_t r = 0; r < concrete.strings()[k].size(); ++r)
            if (monomial_map(formal.seed.strings()[k][r], ctable->size(), formal.specialization) !=
                concrete.strings()[k][r])
                return CheckResult::fail("string entry k=" + std::to_string(k + 1) + " r=" + std::to_string(r) +
                                         " does not specialize to the concrete coefficient");
    if (formal.seed.has_cluster() && concrete.has_cluster())
        for (std::size_t k = 0; k < concrete.N(); ++k)
            if (poly_map(formal.seed.cluster()[k], ctable, formal.specialization) != concrete.cluster()[k])
                return CheckResult::fail("cluster variable " + std::to_string(k + 1) +
                                         " does not specialize to the concrete one");
    return CheckResult::pass();
}

std::vector<Monomial> embedding_images(const FormalAdjoinedSeed& formal, const FoldedTable& folded) {
    const auto& table = *formal.seed.table();
    const std::size_t V = folded.table->size();
    std::vector<Monomial> images(table.size(), Monomial(V));
    for (std::size_t i = 0; i < formal.seed.N(); ++i) {
        Monomial m(V);
        for (std::size_t a = 0; a < folded.layout.size(i); ++a) m[folded.y(i, a)] = 1;
        images[formal.seed.cluster_symbol(i)] = std::move(m);
    }
    for (std::size_t j = 0; j < formal.seed.M(); ++j)
        images[formal.seed.frozen_symbol(j)] = Monomial::unit(V, folded.frozen_symbol.at(j));
    for (auto v : table.indices_with_role(Role::placeholder))
        images[v] = Monomial::unit(V, folded.table->index_of(table.symbol(v).name));
    return images;
}

LaurentPolynomial phi(const FormalAdjoinedSeed& formal, std::size_t k, const FoldedSeed& fs,
                      const QuotientContext& ctx) {
    if (formal.seed.history() != fs.history())
        throw CorrespondenceViolation("the generalized seed and the folded seed were reached by different sequences");
    if (!fs.has_cluster()) throw ValidationError("phi needs a folded seed with cluster variables");
    const auto& ft = *fs.folded_table();
    LaurentPolynomial prod = LaurentPolynomial::constant(ft.table, 1);
    for (std::size_t a = 0; a < ft.layout.size(k); ++a) prod = poly_mul(prod, fs.cluster()[ft.layout.row(k, a)]);
    return ctx.normal_form(prod);
}

CheckResult embedding_conditions(const FormalAdjoinedSeed& formal, const FoldedSeed& fs, const QuotientContext& ctx) {
    if (formal.seed.history() != fs.history())
        throw CorrespondenceViolation("the generalized seed and the folded seed were reached by different sequences");
    const auto& ft = *fs.folded_table();
    const std::size_t V = ft.table->size();
    const auto images = embedding_images(formal, ft);
    auto map = [&](const Monomial& m) { return monomial_map(m, V, images); };
    for (std::size_t k = 0; k < formal.seed.N(); ++k) {
        const std::string at = " for k=" + std::to_string(k + 1);
        GroupMonomials g;
        try {
            g = group_monomials(fs, k);
        } catch (const GroupCoherenceViolation& e) {
            return CheckResult::fail(e.what());
        }
        const auto ectx = exchange_context(formal.seed, k);
        if (map(ectx.u_gt) != g.U_gt || map(ectx.u_lt) != g.U_lt)
            return CheckResult::fail("condition (i) fails" + at);
        if (map(ectx.v_gt[1]) != g.V_gt || map(ectx.v_lt[1]) != g.V_lt)
            return CheckResult::fail("condition (ii) fails" + at);

        const std::size_t d = ft.layout.size(k);
        std::vector<Monomial> w_gt, w_lt;
        for (std::size_t a = 0; a < d; ++a) {
            const auto rm = row_monomials(fs, ft.layout.row(k, a));
            w_gt.push_back(rm.v_gt / g.V_gt);
            w_lt.push_back(rm.v_lt / g.V_lt);
        }
        for (std::size_t r = 0; r <= d; ++r) {
            std::vector<LaurentPolynomial::Term> terms;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
                Monomial m(V);
                for (std::size_t a = 0; a < d; ++a) m *= (mask >> a) & 1 ? w_gt[a] : w_lt[a];
                terms.push_back({std::move(m), Integer(1)});
            }
            const auto rhs = ctx.normal_form(LaurentPolynomial::from_terms(ft.table, std::move(terms)));
            const auto lhs = ctx.normal_form(LaurentPolynomial::from_monomial(ft.table, map(formal.seed.strings()[k][r])));
            if (lhs != rhs)
                return CheckResult::fail("condition (iv) fails" + at + " r=" + std::to_string(r) + ": " +
                                         to_string(lhs) + " vs " + to_string(rhs));
        }
    }
    if (formal.seed.has_cluster() && fs.has_cluster())
        for (std::size_t k = 0; k < formal.seed.N(); ++k) {
            std::optional<LaurentPolynomial> image;
            try {
                image = ctx.normal_form(poly_map(formal.seed.cluster()[k], ft.table, images));
            } catch (const InexactDivision& e) {
                return CheckResult::fail("condition (iii) fails for k=" + std::to_string(k + 1) + ": " + e.what());
            }
            if (*image != phi(formal, k, fs, ctx))
                return CheckResult::fail("condition (iii) fails for k=" + std::to_string(k + 1));
        }
    return CheckResult::pass();
}

CheckResult embedding_check(const GeneralizedSeed& gca, const std::vector<std::size_t>& seq, AdjoinMode mode) {
    const auto initial = GeneralizedSeed::initial(gca.table(), gca.matrix(), gca.divisors(), gca.strings());
    FormalAdjoinedSeed formal = formalize(tau_tilde(initial, mode));
    FoldedSeed fs = folded_initial_seed(initial, mode);
    const QuotientContext ctx(fs.folded_table());
    for (std::size_t i = 0;; ++i) {
        if (auto res = specialization_check(formal); !res) return CheckResult::fail(res.detail + where(i));
        if (auto res = embedding_conditions(formal, fs, ctx); !res) return CheckResult::fail(res.detail + where(i));
        if (i == seq.size()) break;
        formal = mutate_formal(formal, seq[i]);
        fs = group_mutate(fs, seq[i]);
    }
    return CheckResult::pass();
}

CheckResult subquotient_check(const GeneralizedSeed& gca, AdjoinMode mode) {
    const auto initial = GeneralizedSeed::initial(gca.table(), gca.matrix(), gca.divisors(), gca.strings());
    const AdjoinedSeed adj = tau_tilde(initial, mode);
    const FormalAdjoinedSeed formal = formalize(adj);
    const FoldedSeed fs = folded_initial_seed(initial, mode);
    const auto& ft = *fs.folded_table();
    const QuotientContext ctx(fs.folded_table());
    const auto images = embedding_images(formal, ft);
    const std::size_t Vf = formal.seed.table()->size();
    const std::size_t V = ft.table->size();
    const std::int64_t n = adjoin_exponent(initial.divisors(), mode);
    // phi images live on the concrete table, whose symbols open the formal one.
    auto lift = [&](const Monomial& m) {
        auto e = m.exponents();
        e.resize(Vf, 0);
        return Monomial(std::move(e));
    };
    for (std::size_t j = 0; j < initial.M(); ++j) {
        const Monomial image = monomial_map(lift(adj.phi_images()[initial.frozen_symbol(j)]), V, images);
        const Monomial expected = Monomial::unit(V, ft.frozen_symbol[j], detail::narrow_exponent(n));
        if (image != expected)
            return CheckResult::fail("frozen variable " + std::to_string(j + 1) + " maps to " +
                                     monomial_to_string(*ft.table, image) + ", expected " +
                                     monomial_to_string(*ft.table, expected));
    }
    for (std::size_t k = 0; k < initial.N(); ++k) {
        const auto x = LaurentPolynomial::from_monomial(
            ft.table, monomial_map(lift(adj.phi_images()[initial.cluster_symbol(k)]), V, images));
        if (ctx.normal_form(x) != phi(formal, k, fs, ctx))
            return CheckResult::fail("cluster variable " + std::to_string(k + 1) +
                                     " does not map to its group product");
    }
    return CheckResult::pass();
}

}  // namespace gca
