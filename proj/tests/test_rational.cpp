#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kinval/rational.hpp"

using namespace kinval;

TEST_CASE("construction is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(a.reciprocal() == Rational(3));
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(5).sign() == 1);
}

TEST_CASE("string round trip") {
    CHECK(Rational::parse("3/9") == Rational(1, 3));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational::parse(Rational(-355, 113).str()) == Rational(-355, 113));
    CHECK_THROWS_AS(Rational::parse("x"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("big values stay exact") {
    Rational f = factorial(30);
    CHECK(f.str() == "265252859812191058636308480000000");
    CHECK(binomial(60, 30) * factorial(30) * factorial(30) == factorial(60));
}

TEST_CASE("double factorial convention") {
    CHECK(double_factorial(5) == Rational(15));  // 1*3*5
    CHECK(double_factorial(-1) == Rational(1));
    CHECK(double_factorial(1) == Rational(1));
    CHECK(double_factorial(0) == Rational(1));
    CHECK(double_factorial(9) == Rational(945));
    CHECK_THROWS_AS(double_factorial(4), std::domain_error);
    CHECK_THROWS_AS(double_factorial(-3), std::domain_error);
}
