#include <cstdlib>

#include "doctest.h"

#include "fcc/errors.hpp"
#include "fcc/numeric.hpp"

using fcc::BigInt;
using fcc::Rational;

TEST_CASE("binomial coefficients and conventions") {
    CHECK(fcc::binom(0, 0) == 1);
    CHECK(fcc::binom(5, 2) == 10);
    CHECK(fcc::binom(10, 10) == 1);
    CHECK(fcc::binom(52, 5) == 2598960);

    CHECK(fcc::binom(3, -1) == 0);
    CHECK(fcc::binom(-1, 0) == 0);
    CHECK(fcc::binom(-3, -5) == 0);
    CHECK(fcc::binom(3, 5) == 0);

    for (long long m = 1; m <= 40; ++m)
        for (long long k = 1; k <= m; ++k)
            CHECK(fcc::binom(m, k) == fcc::binom(m - 1, k - 1) + fcc::binom(m - 1, k));
}

TEST_CASE("factorial") {
    CHECK(fcc::factorial(0) == 1);
    CHECK(fcc::factorial(5) == 120);
    CHECK(fcc::factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(fcc::factorial(-1), fcc::Error);
}

TEST_CASE("catalan numbers") {
    const long long expected[] = {1,    1,    2,     5,     14,    42,   132,
                                  429,  1430, 4862,  16796, 58786, 208012};
    for (int n = 0; n < 13; ++n) CHECK(fcc::catalan(n) == expected[n]);
    CHECK_THROWS_AS(fcc::catalan(-1), fcc::Error);
}

TEST_CASE("tree counts per dimension") {
    SUBCASE("d = 2 agrees with catalan") {
        for (int n = 0; n <= 14; ++n) CHECK(fcc::fuss_catalan(2, n) == fcc::catalan(n));
    }
    SUBCASE("d = 3") {
        const long long expected[] = {1, 1, 3, 12, 55, 273, 1428, 7752};
        for (int n = 0; n < 8; ++n) CHECK(fcc::fuss_catalan(3, n) == expected[n]);
    }
    SUBCASE("d = 4") {
        CHECK(fcc::fuss_catalan(4, 4) == 140);
        CHECK(fcc::fuss_catalan(4, 5) == 969);
        CHECK(fcc::fuss_catalan(4, 8) == 420732);
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(fcc::fuss_catalan(1, 3), fcc::InvalidDimension);
        CHECK_THROWS_AS(fcc::fuss_catalan(2, -1), fcc::Error);
    }
}

TEST_CASE("scaled binomial conventions") {
    CHECK(fcc::scaled_binom(3, 4, 2) == Rational(9, 2));
    CHECK(fcc::scaled_binom(2, 5, 0) == Rational(2, 5));
    CHECK(fcc::scaled_binom(2, 0, 0) == 0);
    CHECK(fcc::scaled_binom(2, -3, 0) == 0);
    CHECK(fcc::scaled_binom(1, 0, 3) == 0);
    CHECK(fcc::scaled_binom(7, -2, 4) == 0);

    // Agrees with (x/m) C(m, k) away from the poles.
    for (long long m = 1; m <= 12; ++m)
        for (long long k = 0; k <= m; ++k)
            CHECK(fcc::scaled_binom(5, m, k) == Rational(5 * fcc::binom(m, k), BigInt(m)));
}

TEST_CASE("polynomial binomial") {
    CHECK(fcc::poly_binom(-1, 0) == 1);
    CHECK(fcc::poly_binom(-1, 1) == -1);
    CHECK(fcc::poly_binom(-1, 2) == 1);
    CHECK(fcc::poly_binom(-2, 2) == 3);
    CHECK(fcc::poly_binom(-3, 4) == 15);
    CHECK(fcc::poly_binom(4, -1) == 0);

    SUBCASE("matches binom for non-negative upper argument") {
        for (long long m = 0; m <= 12; ++m)
            for (long long k = 0; k <= m + 3; ++k)
                CHECK(fcc::poly_binom(m, k) == fcc::binom(m, k));
    }
    SUBCASE("negation rule C(-m, k) = (-1)^k C(m+k-1, k)") {
        for (long long m = 1; m <= 8; ++m)
            for (long long k = 0; k <= 8; ++k) {
                const fcc::BigInt sign = (k % 2 == 0) ? 1 : -1;
                CHECK(fcc::poly_binom(-m, k) == sign * fcc::binom(m + k - 1, k));
            }
    }
}

TEST_CASE("work cap from the environment") {
    unsetenv("FCC_ORACLE_CAP");
    CHECK(fcc::default_work_cap() == 10'000'000);
    setenv("FCC_ORACLE_CAP", "123", 1);
    CHECK(fcc::default_work_cap() == 123);
    setenv("FCC_ORACLE_CAP", "zzz", 1);
    CHECK(fcc::default_work_cap() == 10'000'000);
    unsetenv("FCC_ORACLE_CAP");
}
