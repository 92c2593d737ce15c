#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "triforms/arith.hpp"

using namespace triforms;

TEST_CASE("is_prime on known values") {
    CHECK(is_prime(181));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(329)); // 7 * 47
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(1'000'000'007ULL));
    CHECK(is_prime(18446744073709551557ULL)); // largest 64-bit prime
}

TEST_CASE("is_prime agrees with trial division") {
    for (u64 n = 0; n < 20'000; ++n) {
        if (is_prime(n) != oracle::is_prime_trial(n)) {
            CAPTURE(n);
            FAIL("primality mismatch");
        }
    }
    SUCCEED();
}

TEST_CASE("factorize on known values") {
    auto f = factorize(51);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == factor_entry{3, 1});
    CHECK(f.factors[1] == factor_entry{17, 1});

    CHECK(factorize(1).factors.empty());

    auto g = factorize(1105);
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[0] == factor_entry{5, 1});
    CHECK(g.factors[1] == factor_entry{13, 1});
    CHECK(g.factors[2] == factor_entry{17, 1});

    auto h = factorize(27);
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0] == factor_entry{3, 3});

    CHECK_THROWS_AS(factorize(4), even_input_error);
    CHECK_THROWS_AS(factorize(0), even_input_error);
}

TEST_CASE("factorize round trip over odd range") {
    for (u64 n = 3; n <= 100'000; n += 2) {
        auto f = factorize(n);
        u64 prod = 1;
        u64 last = 0;
        for (const auto& fe : f.factors) {
            REQUIRE(fe.prime > last);
            REQUIRE(fe.exponent >= 1);
            REQUIRE(is_prime(fe.prime));
            last = fe.prime;
            for (u64 e = 0; e < fe.exponent; ++e) prod *= fe.prime;
        }
        REQUIRE(prod == n);
    }
}

TEST_CASE("factorize reaches the rho stage") {
    // both factors above the trial-division cutoff
    u64 p = 1'000'003, q = 1'000'033;
    auto f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == factor_entry{p, 1});
    CHECK(f.factors[1] == factor_entry{q, 1});
}

TEST_CASE("sqrt_exact on known values") {
    CHECK(sqrt_exact(81) == 9);
    CHECK_FALSE(sqrt_exact(51).has_value());
    CHECK(sqrt_exact(169) == 13);
    CHECK(sqrt_exact(0) == 0);
    CHECK(sqrt_exact(1) == 1);
}

TEST_CASE("sqrt_exact over squares and square-plus-one") {
    for (u64 k = 0; k <= 1'000'000; ++k) {
        auto r = sqrt_exact(k * k);
        REQUIRE(r.has_value());
        REQUIRE(*r == k);
    }
    for (u64 k = 1; k <= 1'000'000; ++k) {
        if (sqrt_exact(k * k + 1).has_value()) {
            CAPTURE(k);
            FAIL("k*k + 1 reported square");
        }
    }
    // near the top of the range
    u64 big = 4'294'967'295ULL;
    CHECK(sqrt_exact(big * big) == big);
    CHECK_FALSE(sqrt_exact(big * big - 1).has_value());
}

TEST_CASE("mod8_class") {
    CHECK(mod8_class(23) == 7);
    CHECK(mod8_class(17) == 1);
    CHECK(mod8_class(1153) == 1);
    CHECK(mod8_class(3) == 3);
    CHECK_THROWS_AS(mod8_class(4), even_input_error);
    CHECK_THROWS_AS(mod8_class(1), std::invalid_argument);
}

TEST_CASE("is_qr_mod_p on known values") {
    CHECK(is_qr_mod_p(2, 7));
    CHECK_FALSE(is_qr_mod_p(2, 5));
    CHECK(is_qr_mod_p(-2, 3));
    CHECK_THROWS_AS(is_qr_mod_p(2, 9), not_prime_error);
    CHECK_THROWS_AS(is_qr_mod_p(2, 2), even_input_error);
}

TEST_CASE("is_qr_mod_p matches exhaustive squaring") {
    for (u64 p : primes_below(200)) {
        if (p == 2) continue;
        for (i64 c = -10; c <= 10; ++c) {
            CAPTURE(p, c);
            REQUIRE(is_qr_mod_p(c, p) == oracle::is_square_mod_p_exhaustive(c, p));
        }
    }
}

TEST_CASE("quadratic residues of 2 and -2 by residue class") {
    for (u64 p : primes_below(10'000)) {
        if (p == 2) continue;
        unsigned r = static_cast<unsigned>(p % 8);
        CAPTURE(p);
        REQUIRE(is_qr_mod_p(2, p) == (r == 1 || r == 7));
        REQUIRE(is_qr_mod_p(-2, p) == (r == 1 || r == 3));
    }
}

TEST_CASE("primes_below") {
    CHECK(primes_below(2).empty());
    CHECK(primes_below(20) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_below(1'000).size() == 168);
}

TEST_CASE("checked arithmetic") {
    CHECK(checked_mul(3, 7) == 21);
    CHECK_THROWS_AS(checked_mul(u64(1) << 33, u64(1) << 33), std::overflow_error);
    CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), std::overflow_error);
}
