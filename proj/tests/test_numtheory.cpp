#include <doctest.h>

#include <cstdint>
#include <vector>

#include <cyclolat/errors.hpp>
#include <cyclolat/numtheory.hpp>

using namespace cyclolat;

TEST_CASE("admissibility accepts n >= 5 away from 2 mod 4") {
    for (std::int64_t n : {5, 7, 8, 9, 11, 12, 13, 15, 16, 20, 185})
        CHECK(is_admissible(n));
    for (std::int64_t n : {-7, 0, 1, 2, 3, 4, 6, 10, 14, 18, 22, 26, 30})
        CHECK_FALSE(is_admissible(n));
}

TEST_CASE("make_modulus rejects inadmissible input with a named condition") {
    CHECK_THROWS_AS(make_modulus(4), InvalidModulus);
    CHECK_THROWS_AS(make_modulus(0), InvalidModulus);
    CHECK_THROWS_AS(make_modulus(-9), InvalidModulus);
    CHECK_THROWS_WITH_AS(make_modulus(6), "modulus must not be 2 (mod 4), got 6",
                         InvalidModulus);
    CHECK_THROWS_WITH_AS(make_modulus(3), "modulus must be at least 5, got 3",
                         InvalidModulus);
}

TEST_CASE("make_modulus derives factorization, totient, and rank") {
    const Modulus seven = make_modulus(7);
    CHECK(seven.n == 7);
    CHECK(seven.s == 1);
    CHECK(seven.phi == 6);
    CHECK(seven.rank == 2);
    REQUIRE(seven.factors.size() == 1);
    CHECK(seven.factors[0] == PrimePower{7, 1, 7});

    const Modulus twelve = make_modulus(12);
    CHECK(twelve.s == 2);
    CHECK(twelve.phi == 4);
    CHECK(twelve.rank == 1);
    REQUIRE(twelve.factors.size() == 2);
    CHECK(twelve.factors[0] == PrimePower{2, 2, 4});
    CHECK(twelve.factors[1] == PrimePower{3, 1, 3});

    const Modulus big = make_modulus(185);
    CHECK(big.s == 2);
    CHECK(big.phi == 144);
    CHECK(big.rank == 71);
}

TEST_CASE("factorize and totient agree with hand values") {
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0].value == 8);
    CHECK(f[1].value == 9);
    CHECK(f[2].value == 5);
    CHECK(totient(1) == 1);
    CHECK(totient(97) == 96);
    CHECK(totient(360) == 96);
}

TEST_CASE("gamma_subsets lists proper support subsets by ascending mask") {
    const auto single = gamma_subsets(make_modulus(7));
    REQUIRE(single.size() == 1);
    CHECK(single[0].mask == 0);
    CHECK(single[0].n_I == 1);
    CHECK(single[0].m_I == 7);

    const auto pair = gamma_subsets(make_modulus(15));
    REQUIRE(pair.size() == 3);
    CHECK(pair[0].n_I == 1);
    CHECK(pair[0].m_I == 15);
    CHECK(pair[1].n_I == 3);
    CHECK(pair[1].m_I == 5);
    CHECK(pair[2].n_I == 5);
    CHECK(pair[2].m_I == 3);

    // Prime powers enter with their full exponent: 12 = 4 * 3.
    const auto twelve = gamma_subsets(make_modulus(12));
    REQUIRE(twelve.size() == 3);
    CHECK(twelve[1].n_I == 4);
    CHECK(twelve[2].n_I == 3);
}

TEST_CASE("unit labels and embedding indices") {
    CHECK(unit_labels(make_modulus(5)) == std::vector<std::int64_t>{2});
    CHECK(unit_labels(make_modulus(7)) == std::vector<std::int64_t>{2, 3});
    CHECK(unit_labels(make_modulus(9)) == std::vector<std::int64_t>{2, 4});
    CHECK(unit_labels(make_modulus(15)) == std::vector<std::int64_t>{2, 4, 7});
    CHECK(unit_labels(make_modulus(16)) == std::vector<std::int64_t>{3, 5, 7});

    CHECK(embedding_indices(make_modulus(7)) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(embedding_indices(make_modulus(15)) == std::vector<std::int64_t>{1, 2, 4, 7});
    CHECK(embedding_indices(make_modulus(16)) == std::vector<std::int64_t>{1, 3, 5, 7});

    for (std::int64_t n : admissible_moduli(200)) {
        const Modulus mod = make_modulus(n);
        CHECK(static_cast<std::int64_t>(unit_labels(mod).size()) == mod.rank);
        CHECK(static_cast<std::int64_t>(embedding_indices(mod).size()) == mod.phi / 2);
    }
}

TEST_CASE("admissible_moduli enumerates the admissible range") {
    const std::vector<std::int64_t> expected{5,  7,  8,  9,  11, 12, 13, 15, 16, 17,
                                             19, 20, 21, 23, 24, 25, 27, 28, 29};
    CHECK(admissible_moduli(30) == expected);
    CHECK(admissible_moduli(4).empty());
}

TEST_CASE("totient_sieve matches per-n factorization") {
    const auto table = totient_sieve(2000);
    REQUIRE(table.size() == 2001);
    CHECK(table[0].phi == 0);
    CHECK(table[1].phi == 1);
    CHECK(table[1].distinct_primes == 0);
    for (std::int64_t n = 2; n <= 2000; ++n) {
        CHECK(table[n].phi == totient(n));
        CHECK(table[n].distinct_primes == static_cast<int>(factorize(n).size()));
    }
}
