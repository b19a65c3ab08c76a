#include <doctest.h>

#include "sharptop/extvals.hpp"
#include "sharptop/rational.hpp"

using namespace sharptop;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 2) * Rational(2, 3)) == Rational(1));
    CHECK((Rational(1) / Rational(-2)) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 2);
    CHECK(Rational(-1, 2).num() == -1);
    CHECK(Rational(7, -2) == Rational(-7, 2));
    CHECK(Rational(5, 2) < Rational(3));
    CHECK(Rational(5, 2).floor() == 2);
    CHECK(Rational(5, 2).ceil() == 3);
    CHECK(Rational(-5, 2).floor() == -3);
    CHECK(Rational(-5, 2).ceil() == -2);
}

TEST_CASE("rational parse and str round trip") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-4).str() == "-4");
    CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));

    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2x"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), InvariantError);
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational big(std::int64_t(1) << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("dyadics") {
    CHECK(Rational::dyadic(3) == Rational(1, 8));
    CHECK(Rational::dyadic(0) == Rational(1));
    CHECK(Rational(1, 8).is_dyadic());
    CHECK(Rational(3, 8).is_dyadic());
    CHECK_FALSE(Rational(1, 3).is_dyadic());
}

TEST_CASE("complex rational reciprocal") {
    QComplex z{Rational(1), Rational(2)};
    QComplex one = z * z.reciprocal();
    CHECK(one == QComplex(Rational(1)));
    CHECK_THROWS_AS(QComplex{}.reciprocal(), InvariantError);
    CHECK(QComplex{Rational(-3), Rational(4)}.l1() == Rational(7));
}

TEST_CASE("extended rational ordering and the infinity marker") {
    ExtRat inf = ExtRat::infinity();
    ExtRat two{Rational(2)};
    CHECK(inf.is_infinite());
    CHECK(two < inf);
    CHECK(inf == inf);
    CHECK((two + inf).is_infinite());
    CHECK((two + ExtRat(Rational(1, 2))) == ExtRat(Rational(5, 2)));
    CHECK(min(two, inf) == two);
    CHECK_THROWS_AS(inf.value(), InvariantError);
}
