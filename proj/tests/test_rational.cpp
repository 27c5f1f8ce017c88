#include <doctest.h>

#include "qcohom/error.hpp"
#include "qcohom/rational.hpp"

using namespace qcohom;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(-6, -8) == Rational(3, 4));
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3, 4).denominator() == 4);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 3) / Rational(3) == Rational(1, 9));
    CHECK(Rational(-2, 5).abs() == Rational(2, 5));
    CHECK(Rational(-2, 5).pow(3) == Rational(-8, 125));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 0), StructuralError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), StructuralError);
    CHECK_THROWS_AS(Rational(0).inverse(), StructuralError);
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse(" 6 / 8 ") == Rational(3, 4));
    CHECK(Rational::parse("0.75") == Rational(3, 4));
    CHECK(Rational::parse("-0.2") == Rational(-1, 5));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), StructuralError);
    CHECK_THROWS_AS(Rational::parse("abc"), StructuralError);
    CHECK_THROWS_AS(Rational::parse(""), StructuralError);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial(12) == Rational(479001600));
}
