#include "doctest.h"

#include "frobcheck/error.hpp"
#include "frobcheck/rational.hpp"

using frobcheck::Rational;
using frobcheck::ShapeError;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(6, 3).is_one() == false);
    CHECK(Rational(3, 3).is_one());
    CHECK(Rational(-3, -3).is_one());
    CHECK(Rational(7, -1).to_string() == "-7");
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK(Rational(1, 7) / Rational(1, 7) == Rational(1));
    CHECK(-Rational(1, 2) == Rational(-1, 2));

    // the classic float counterexample holds exactly here
    Rational acc;
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc.is_one());
}

TEST_CASE("large intermediate values stay exact") {
    Rational big(1);
    for (int i = 2; i <= 25; ++i) big *= Rational(i);
    Rational back = big;
    for (int i = 2; i <= 25; ++i) back /= Rational(i);
    CHECK(back.is_one());
}

TEST_CASE("parse accepts p and p/q") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK(Rational::parse("0") == Rational(0));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), ShapeError);
    CHECK_THROWS_AS(Rational::parse("a"), ShapeError);
    CHECK_THROWS_AS(Rational::parse("1/"), ShapeError);
    CHECK_THROWS_AS(Rational::parse("/2"), ShapeError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ShapeError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ShapeError);
    CHECK_THROWS_AS(Rational::parse("1 2"), ShapeError);
}

TEST_CASE("division by zero throws") {
    Rational a(1);
    CHECK_THROWS_AS(a /= Rational(0), ShapeError);
}

TEST_CASE("to_string round-trips through parse") {
    for (long n = -6; n <= 6; ++n)
        for (long d = 1; d <= 4; ++d) {
            const Rational r(n, d);
            CHECK(Rational::parse(r.to_string()) == r);
        }
}
