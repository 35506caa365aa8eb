#include <doctest.h>

#include "omegacalc/rational.hpp"

#include <stdexcept>

using namespace omegacalc;

TEST_SUITE("rational") {

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, -2).den() > 0);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string construction and printing") {
    CHECK(Rational("3/2") == Rational(3, 2));
    CHECK(Rational("-5") == Rational(-5));
    CHECK(Rational("4/6") == Rational(2, 3));
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("comparisons and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 7).is_one());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK(Rational(-4, 9).sign() == -1);
    CHECK(Rational(-4, 9).abs() == Rational(4, 9));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    for (int n = 1; n <= 30; ++n) CHECK(factorial(n) == Integer(n) * factorial(n - 1));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    // Pascal identity
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

} // TEST_SUITE
