#include <doctest.h>

#include <random>

#include "wheelmp/rational.hpp"

using wheelmp::DivisionByZero;
using wheelmp::ParseError;
using wheelmp::Rational;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational arithmetic on exact fractions") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 15) + Rational(-1, 5) == Rational(4, 15));
    CHECK(Rational(22, 7) * Rational(0) == Rational(0));
    CHECK(Rational(3, 4) / Rational(3, 4) == Rational(1));
    CHECK(-Rational(2, 5) == Rational(-2, 5));
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(4, 10) == Rational(2, 5));
    CHECK(Rational(4, 10).num() == 2);
    CHECK(Rational(4, 10).den() == 5);

    // Negative denominators normalize to a positive one.
    Rational r(1, -2);
    CHECK(r.den() == 2);
    CHECK(r.num() == -1);

    // Zero is always 0/1.
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(0, 7).is_zero());

    // Reducing a reduced value changes nothing.
    Rational reduced(2, 5);
    CHECK(Rational(mpz_class(reduced.num()), mpz_class(reduced.den())) == reduced);
}

TEST_CASE("rational division by zero is an error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational parse and render") {
    CHECK(Rational::parse("2/5") == Rational(2, 5));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse(" 7 / 2 ") == Rational(7, 2));
    CHECK(Rational(2, 5).str() == "2/5");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(6, -4).str() == "-3/2");

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("2.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x/3"), ParseError);

    std::mt19937 rng(20240901);
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational(rng);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(5, 10) <= Rational(1, 2));
    CHECK(Rational(3, 2) > Rational(1));
}

TEST_CASE("field axiom spot checks on random rationals") {
    std::mt19937 rng(8362);
    for (int i = 0; i < 200; ++i) {
        Rational x = random_rational(rng);
        Rational y = random_rational(rng);
        Rational z = random_rational(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Rational(0));
        if (!x.is_zero()) CHECK(x / x == Rational(1));
    }
}
