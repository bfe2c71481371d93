#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gca/io.hpp"
#include "gca/unfolding.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

oracle::Rows rows_of(const IntMatrix& m) {
    oracle::Rows out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

FoldedMatrix fix_a() {
    const auto s = fixture("FIX-A");
    return build(s.matrix(), s.divisors());
}

// Group mutation by the textbook rule applied to every row of the group.
oracle::Rows oracle_group_mutate(oracle::Rows b, const GroupLayout& layout, std::size_t k) {
    for (std::size_t a = 0; a < layout.size(k); ++a) b = oracle::mutate(b, layout.row(k, a));
    return b;
}

}  // namespace

TEST_CASE("layout of the two-group example") {
    const auto f = fix_a();
    const auto& l = f.layout();
    CHECK(l.rows() == 5);
    CHECK(l.cols() == 17);
    CHECK(l.frozen_col(0) == 5);
    CHECK(l.t_col(0, 0) == 7);
    CHECK(l.s_col(0, 0) == 9);
    CHECK(l.t_col(1, 0) == 11);
    CHECK(l.s_col(1, 2) == 16);
    CHECK(l.group_of_row(3) == 1);
    const auto groups = column_groups(l);
    CHECK(groups.size() == 7);
    CHECK(groups[2] == std::vector<std::size_t>{5, 6});
}

TEST_CASE("build agrees with the block description") {
    const auto s = fixture("FIX-A");
    CHECK(rows_of(fix_a().entries()) == oracle::unfold(rows_of(s.matrix().entries()), {2, 3}, 6));
    const auto c = fixture("FIX-C");
    CHECK(rows_of(build(c.matrix(), c.divisors()).entries()) ==
          oracle::Rows{{0, 0, 2, 1, 0, -1, 0}, {0, 0, 2, 0, 1, 0, -1}});
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        const auto seed = random_seed(rng);
        const auto mult = seed.divisors().total_multiplicity();
        REQUIRE(rows_of(build(seed.matrix(), seed.divisors()).entries()) ==
                oracle::unfold(rows_of(seed.matrix().entries()), seed.divisors().values(), mult));
    }
}

TEST_CASE("unit divisors give a degenerate unfolding") {
    const auto b = ExtendedExchangeMatrix::from_rows({{0, 2, -1}, {-2, 0, 3}});
    const auto f = build(b, DivisorVector::ones(2));
    CHECK(rows_of(f.entries()) == oracle::Rows{{0, 2, -1, 1, -1, 0, 0}, {-2, 0, 3, 0, 0, 1, -1}});
}

TEST_CASE("group mutations of the two-group example") {
    const auto f1 = group_mutate(fix_a(), 0);
    CHECK(rows_of(f1.entries()) == oracle::Rows{
                                       {0, 0, -4, -4, -4, 9, -15, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                                       {0, 0, -4, -4, -4, 9, -15, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0},
                                       {4, 4, 0, 0, 0, -76, 14, 0, 0, -4, -4, 1, 0, 0, -1, 0, 0},
                                       {4, 4, 0, 0, 0, -76, 14, 0, 0, -4, -4, 0, 1, 0, 0, -1, 0},
                                       {4, 4, 0, 0, 0, -76, 14, 0, 0, -4, -4, 0, 0, 1, 0, 0, -1},
                                   });
    const auto f2 = group_mutate(f1, 1);
    CHECK(f2(0, 5) == -903);
    CHECK(f2(0, 9) == -47);
    CHECK(f2(0, 10) == -48);
    CHECK(f2.history() == std::vector<std::size_t>{0, 1});
    CHECK(f2.times_mutated(0) == 1);
}

TEST_CASE("group mutation agrees with the textbook rule and the block formula") {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 200; ++i) {
        const auto seed = random_seed(rng);
        auto f = build(seed.matrix(), seed.divisors());
        auto rows = rows_of(f.entries());
        for (auto k : random_sequence(rng, seed.N(), 5)) {
            const auto next = group_mutate(f, k);
            rows = oracle_group_mutate(rows, f.layout(), k);
            REQUIRE(rows_of(next.entries()) == rows);
            REQUIRE(group_mutate_blockwise(f, k) == next);
            REQUIRE(group_mutate(next, k) == f);
            f = next;
        }
    }
}

TEST_CASE("Hadamard, unfolding and double-constant conditions along random sequences") {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 200; ++i) {
        const auto seed = random_seed(rng);
        const auto& d = seed.divisors();
        auto f = build(seed.matrix(), d);
        auto b = seed.matrix();
        for (auto k : random_sequence(rng, seed.N(), 5)) {
            f = group_mutate(f, k);
            b = mutate(b, k);
            const auto h = hadamard_check(f, b, d);
            REQUIRE_MESSAGE(h.ok, h.detail);
            const auto u = unfolding_conditions_check(f, b, d);
            REQUIRE_MESSAGE(u.ok, u.detail);
            const auto w = double_constant_check(f);
            for (std::size_t g = 0; g < seed.N(); ++g)
                REQUIRE(w.alpha[g] == (f.times_mutated(g) % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("double-constant witnesses") {
    const auto w0 = double_constant_check(fix_a());
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(w0.alpha[i] == 1);
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(w0.a[i][j] == 0);
            CHECK(w0.c[i][j] == 0);
        }
    }
    const auto w1 = double_constant_check(group_mutate(fix_a(), 0));
    CHECK(w1.alpha[0] == -1);
    CHECK(w1.c[0][0] == 0);
    const auto w2 = double_constant_check(group_mutate_sequence(fix_a(), {0, 1}));
    CHECK(w2.a[0][0] == -48);
    CHECK(w2.alpha[0] == -1);
}

TEST_CASE("structure violations name the block") {
    const auto f = fix_a();
    IntMatrix broken = f.entries();
    broken(0, 8) = 3;
    const FoldedMatrix bad(broken, f.layout(), f.multiplicity(), {});
    CHECK_THROWS_AS(double_constant_check(bad), StructureViolation);
    const auto s = fixture("FIX-A");
    IntMatrix off = f.entries();
    off(0, 2) = 5;
    CHECK_FALSE(hadamard_check(FoldedMatrix(off, f.layout(), f.multiplicity(), {}), s.matrix(), s.divisors()).ok);
}

TEST_CASE("unfolding column sums on the initial matrix") {
    const auto s = fixture("FIX-A");
    const auto f = fix_a();
    std::int64_t sum = 0;
    for (std::size_t a = 0; a < 2; ++a) sum += f(f.layout().row(0, a), f.layout().principal_col(1, 0));
    CHECK(sum == s.matrix()(0, 1));
    CHECK(unfolding_conditions_check(f, s.matrix(), s.divisors()).ok);
}

TEST_CASE("bad inputs") {
    const auto s = fixture("FIX-A");
    CHECK_THROWS_AS(group_mutate(fix_a(), 2), IndexOutOfRange);
    CHECK_THROWS_AS(build(s.matrix(), s.divisors(), 4), InvalidDivisors);
    const auto bad = ExtendedExchangeMatrix::from_rows({{0, 3}, {-2, 0}});
    CHECK_THROWS_AS(build(bad, DivisorVector({2, 2})), InvalidDivisors);
}

TEST_CASE("folded text form") {
    const std::string text = format_folded(group_mutate(fix_a(), 0));
    CHECK(text.find("# group T2: columns 12-14\n") != std::string::npos);
    CHECK(text.find("# group mutations: 1\n") != std::string::npos);
    CHECK(text.find("5 12\n0 0 -4 -4 -4 9 -15 -1 0 1 0 0 0 0 0 0 0;\n") != std::string::npos);
}
