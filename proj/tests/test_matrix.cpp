#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gca/io.hpp"
#include "gca/matrix.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

const ExtendedExchangeMatrix kB = ExtendedExchangeMatrix::from_rows({{0, 8, -3, 5}, {-12, 0, -2, 7}});
const DivisorVector kD({2, 3});

oracle::Rows rows_of(const IntMatrix& m) {
    oracle::Rows out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

// Random seeds from the generator used by the command-line suites.
std::vector<GeneralizedSeed> random_seeds(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GeneralizedSeed> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_seed(rng));
    return out;
}

}  // namespace

TEST_CASE("diagonalizer") {
    CHECK(diagonalizer(ExtendedExchangeMatrix::from_rows({{0, 3}, {-2, 0}})) == std::vector<std::int64_t>{2, 3});
    CHECK(diagonalizer(ExtendedExchangeMatrix::from_rows({{0, 2, 1}, {-2, 0, 5}})) ==
          std::vector<std::int64_t>{1, 1});
    CHECK_THROWS_AS(diagonalizer(ExtendedExchangeMatrix::from_rows({{0, 1}, {1, 0}})), NotSkewSymmetrizable);
    // Inconsistent ratios around a triangle.
    CHECK_THROWS_AS(diagonalizer(ExtendedExchangeMatrix::from_rows({{0, 1, 1}, {-2, 0, 1}, {-1, -1, 0}})),
                    NotSkewSymmetrizable);
    CHECK(diagonalizer(kB) == std::vector<std::int64_t>{3, 2});
}

TEST_CASE("modified matrix") {
    CHECK(modify(kB, kD) == ModifiedExchangeMatrix::from_rows({{0, 4, -3, 5}, {-4, 0, -2, 7}}));
    CHECK(modify(kB, DivisorVector::ones(2)).entries() == kB.entries());
    const auto bad = ExtendedExchangeMatrix::from_rows({{0, 7, 1}, {-6, 0, 1}});
    CHECK_THROWS_AS(modify(bad, kD), InvalidDivisors);
    CHECK(unmodify(modify(kB, kD), kD) == kB);
}

TEST_CASE("matrix mutation on the two-by-four example") {
    CHECK(mutate(kB, 0) == ExtendedExchangeMatrix::from_rows({{0, -8, 3, -5}, {12, 0, -38, 7}}));
    CHECK(mutate(mutate(kB, 0), 0) == kB);
    const auto twice = mutate_sequence(kB, {0, 1});
    CHECK(twice(0, 2) == -301);
    CHECK(twice(1, 2) == 38);
    CHECK(mutate_sequence(kB, {}) == kB);
    CHECK(mutate_sequence(kB, {0, 0}) == kB);
    CHECK_THROWS_AS(mutate(kB, 2), IndexOutOfRange);
}

TEST_CASE("modified mutation rule") {
    const auto bh = modify(kB, kD);
    CHECK(mutate_modified(bh, kD, 0) == ModifiedExchangeMatrix::from_rows({{0, -4, 3, -5}, {4, 0, -38, 7}}));
    for (std::size_t k = 0; k < 2; ++k) CHECK(modify(mutate(kB, k), kD) == mutate_modified(bh, kD, k));
    const auto ones = DivisorVector::ones(2);
    CHECK(mutate_modified(modify(kB, ones), ones, 1).entries() == mutate(kB, 1).entries());
}

TEST_CASE("mutation agrees with the textbook rule on random matrices") {
    for (const auto& seed : random_seeds(200, 21)) {
        const auto& b = seed.matrix();
        for (std::size_t k = 0; k < b.N(); ++k)
            REQUIRE(rows_of(mutate(b, k).entries()) == oracle::mutate(rows_of(b.entries()), k));
    }
}

TEST_CASE("modify commutes with mutation on random seeds") {
    for (const auto& seed : random_seeds(200, 22)) {
        const auto& d = seed.divisors();
        for (std::size_t k = 0; k < seed.N(); ++k)
            REQUIRE(modify(mutate(seed.matrix(), k), d) == mutate_modified(modify(seed.matrix(), d), d, k));
    }
}

TEST_CASE("divisibility and the diagonalizer persist along sequences") {
    std::mt19937_64 rng(23);
    for (const auto& seed : random_seeds(200, 24)) {
        const auto diag = diagonalizer(seed.matrix());
        auto b = seed.matrix();
        for (auto k : random_sequence(rng, seed.N(), 6)) {
            b = mutate(b, k);
            REQUIRE_NOTHROW(validate_divisors(b, seed.divisors()));
            REQUIRE(diagonalizer(b) == diag);
        }
    }
}

TEST_CASE("matrix text format") {
    const std::string text = format_matrix(kB);
    CHECK(text == "2 2\n0 8 -3 5;\n-12 0 -2 7\n");
    CHECK(parse_matrix(text) == kB);
    CHECK(parse_matrix("2 2 0 8 -3 5; -12 0 -2 7") == kB);
    CHECK_THROWS_AS(parse_matrix("2 2\n0 8 -3;\n-12 0 -2 7\n"), ParseError);
}

TEST_CASE("divisor vector") {
    CHECK(kD.total_multiplicity() == 6);
    CHECK(kD.pseudo_rank() == 5);
    CHECK(kD.lcm() == 6);
    CHECK_THROWS_AS(DivisorVector({2, 0}), InvalidDivisors);
}
