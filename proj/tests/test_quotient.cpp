#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gca/io.hpp"
#include "gca/quotient.hpp"

using namespace gca;

namespace {

LaurentPolynomial P(const FoldedTablePtr& t, const char* text) { return parse_polynomial(t->table, text); }
Monomial Mono(const FoldedTablePtr& t, const char* text) { return parse_monomial(t->table, text); }

std::vector<std::string> names(const VariableTable& table) {
    std::vector<std::string> out;
    for (const auto& s : table.symbols()) out.push_back(s.name);
    return out;
}

// Random polynomial over the non-placeholder symbols of a folded table.
LaurentPolynomial random_poly(std::mt19937_64& rng, const FoldedTablePtr& t) {
    std::uniform_int_distribution<int> exp(-2, 2), coef(-3, 3), count(1, 4);
    const auto& table = *t->table;
    std::vector<LaurentPolynomial::Term> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(table.size());
        for (std::size_t v = 0; v < table.size(); ++v)
            if (table.symbol(v).role != Role::placeholder) m[v] = exp(rng);
        terms.push_back({m, coef(rng)});
    }
    return LaurentPolynomial::from_terms(t->table, terms);
}

}  // namespace

TEST_CASE("folded table of the rank-one seed") {
    const auto fs = folded_initial_seed(fixture("FIX-C"));
    const auto& t = fs.folded_table();
    CHECK(names(*t->table) == std::vector<std::string>{"y1_1", "y1_2", "F", "t1_1", "t1_2", "s1_1", "s1_2", "rho1_1"});
    CHECK(fs.cluster().size() == 2);
    CHECK(fs.cluster()[0] == P(t, "y1_1"));
    CHECK(fs.matrix().entries() == IntMatrix::from_rows({{0, 0, 2, 1, 0, -1, 0}, {0, 0, 2, 0, 1, 0, -1}}));
    CHECK(t->table->symbol(t->placeholder[0][1]).name == placeholder_name(0, 1));
}

TEST_CASE("frozen names that would clash fall back to a prefix") {
    const auto table = make_table({{"x", Role::cluster}, {"f", Role::frozen}, {"F", Role::frozen}});
    const auto d = DivisorVector::ones(1);
    const auto s = GeneralizedSeed::initial(table, ExtendedExchangeMatrix::from_rows({{0, 1, 1}}), d,
                                            GeneralizedSeed::trivial_strings(*table, d));
    const auto ft = make_folded_table(s);
    const auto n = names(*ft->table);
    CHECK(std::count(n.begin(), n.end(), "F") == 1);
    CHECK(std::count(n.begin(), n.end(), "F_f") + std::count(n.begin(), n.end(), "F_F") >= 1);
}

TEST_CASE("unit divisor seed has only t and s as extra frozens") {
    const auto table = make_table({{"x", Role::cluster}});
    const auto d = DivisorVector::ones(1);
    const auto s = GeneralizedSeed::initial(table, ExtendedExchangeMatrix::from_rows({{0}}), d,
                                            GeneralizedSeed::trivial_strings(*table, d));
    const auto fs = folded_initial_seed(s);
    CHECK(names(*fs.table()) == std::vector<std::string>{"y1_1", "t1_1", "s1_1"});
}

TEST_CASE("group monomials") {
    const auto c = folded_initial_seed(fixture("FIX-C"));
    const auto gc = group_monomials(c, 0);
    CHECK(gc.U_gt.is_one());
    CHECK(gc.U_lt.is_one());
    CHECK(gc.V_gt == Mono(c.folded_table(), "F^2"));
    CHECK(gc.V_lt.is_one());
    const auto a = folded_initial_seed(fixture("FIX-A"));
    const auto ga = group_monomials(a, 0);
    CHECK(ga.V_gt == Mono(a.folded_table(), "B^15"));
    CHECK(ga.V_lt == Mono(a.folded_table(), "A^9"));
    CHECK(ga.U_gt == Mono(a.folded_table(), "y2_1^4*y2_2^4*y2_3^4"));
}

TEST_CASE("group coherence along random group sequences") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 100; ++i) {
        auto fs = folded_initial_seed(random_seed(rng), AdjoinMode::total, false);
        for (auto k : random_sequence(rng, fs.folded_table()->layout.N(), 5)) {
            fs = group_mutate(fs, k);
            for (std::size_t g = 0; g < fs.folded_table()->layout.N(); ++g) REQUIRE_NOTHROW(group_monomials(fs, g));
        }
    }
}

TEST_CASE("normal form") {
    const auto fs = folded_initial_seed(fixture("FIX-C"));
    const QuotientContext ctx(fs.folded_table());
    const auto& t = fs.folded_table();
    CHECK(ctx.normal_form(P(t, "s1_1*s1_2")).is_one());
    CHECK(ctx.normal_form(P(t, "t1_1*t1_2")).is_one());
    CHECK(ctx.normal_form(P(t, "rho1_1")) == P(t, "t1_1*s1_1^-1 + t1_1^-1*s1_1"));
    CHECK(ctx.symmetric_sum(0, 1) == P(t, "t1_1*s1_2 + t1_2*s1_1"));
    CHECK(ctx.normal_form(ctx.symmetric_sum(0, 0)).is_one());
    CHECK(ctx.normal_form(ctx.symmetric_sum(0, 2)).is_one());
    const auto plain = P(t, "y1_1*F + 3*t1_1^2");
    CHECK(ctx.normal_form(plain) == plain);
}

TEST_CASE("normal form is idempotent and multiplicative") {
    std::mt19937_64 rng(72);
    for (const auto& name : fixture_names()) {
        const auto ft = folded_initial_seed(fixture(name), AdjoinMode::total, false).folded_table();
        const QuotientContext ctx(ft);
        for (int i = 0; i < 200; ++i) {
            const auto p = random_poly(rng, ft);
            const auto q = random_poly(rng, ft);
            const auto np = ctx.normal_form(p);
            REQUIRE(ctx.normal_form(np) == np);
            REQUIRE(ctx.normal_form(p * q) == ctx.normal_form(np * ctx.normal_form(q)));
        }
    }
}

TEST_CASE("product formula") {
    const auto c = folded_initial_seed(fixture("FIX-C"));
    const auto& t = c.folded_table();
    const QuotientContext ctx(t);
    const auto theta = folded_exchange_formal(c, 0) * folded_exchange_formal(c, 1);
    CHECK(theta == P(t, "F^4*t1_1*t1_2 + F^2*t1_1*s1_2 + F^2*s1_1*t1_2 + s1_1*s1_2"));
    CHECK(ctx.normal_form(theta) == ctx.normal_form(P(t, "F^4 + rho1_1*F^2 + 1")));
    CHECK(product_formula_check(c, 0).ok);
    const auto a1 = group_mutate(folded_initial_seed(fixture("FIX-A")), 0);
    CHECK(product_formula_check(a1, 0).ok);
    CHECK(product_formula_check(a1, 1).ok);
}

TEST_CASE("a wrong coefficient table is reported with its residual") {
    const auto c = folded_initial_seed(fixture("FIX-C"));
    auto rho = placeholder_coefficients(c);
    rho.rho[0][1] = Monomial(c.table()->size());
    const auto res = product_formula_check(c, 0, rho);
    CHECK_FALSE(res.ok);
    CHECK(res.detail.find("residual") != std::string::npos);
}

TEST_CASE("placeholders swap after an odd number of mutations") {
    const auto fs = folded_initial_seed(fixture("FIX-B"), AdjoinMode::total, false);
    const auto& t = *fs.folded_table();
    const auto before = placeholder_coefficients(fs);
    CHECK(before.rho[0][1] == Monomial::unit(t.table->size(), t.placeholder[0][1]));
    const auto after = placeholder_coefficients(group_mutate(fs, 0));
    CHECK(after.rho[0][1] == Monomial::unit(t.table->size(), t.placeholder[0][2]));
    CHECK(after.rho[1][1] == before.rho[1][1]);
}

TEST_CASE("embedding of the rank-one seed after one mutation") {
    const auto gca = fixture("FIX-C");
    auto formal = mutate_formal(formalize(tau_tilde(gca)), 0);
    const auto fs = group_mutate(folded_initial_seed(gca), 0);
    const QuotientContext ctx(fs.folded_table());
    const auto& t = fs.folded_table();
    const auto image = phi(formal, 0, fs, ctx);
    CHECK(image == ctx.normal_form(fs.cluster()[0] * fs.cluster()[1]));
    CHECK(ctx.normal_form(image * P(t, "y1_1*y1_2")) == ctx.normal_form(P(t, "1 + rho1_1*F^2 + F^4")));
    CHECK(embedding_conditions(formal, fs, ctx).ok);
    CHECK(specialization_check(formal).ok);
}

TEST_CASE("mismatched sequences are rejected") {
    const auto gca = fixture("FIX-B");
    const auto formal = mutate_formal(formalize(tau_tilde(gca)), 0);
    const auto fs = group_mutate(folded_initial_seed(gca), 1);
    const QuotientContext ctx(fs.folded_table());
    CHECK_THROWS_AS(phi(formal, 0, fs, ctx), CorrespondenceViolation);
}

TEST_CASE("embedding checks on the fixtures and random seeds") {
    for (std::size_t len = 0; len <= 3; ++len)
        for (const auto& seq : all_sequences(1, len)) CHECK(embedding_check(fixture("FIX-C"), seq).ok);
    for (const auto& seq : all_sequences(2, 2)) {
        CHECK(embedding_check(fixture("FIX-B"), seq).ok);
        CHECK(embedding_check(fixture("FIX-A"), seq).ok);
        CHECK(embedding_check(fixture("FIX-A"), seq, AdjoinMode::lcm).ok);
    }
    std::mt19937_64 rng(73);
    for (int i = 0; i < 20; ++i) {
        const auto seed = random_seed(rng);
        const auto res = embedding_check(seed, random_sequence(rng, seed.N(), 3));
        REQUIRE_MESSAGE(res.ok, res.detail);
    }
}

TEST_CASE("subquotient") {
    for (const auto& name : fixture_names()) {
        CHECK(subquotient_check(fixture(name)).ok);
        CHECK(subquotient_check(fixture(name), AdjoinMode::lcm).ok);
    }
}
