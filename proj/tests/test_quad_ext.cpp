#include <doctest.h>

#include <random>

#include "wheelmp/quad_ext.hpp"

using wheelmp::DiscriminantMismatch;
using wheelmp::DomainError;
using wheelmp::QuadExt;
using wheelmp::Rational;
using wheelmp::SurdNotZero;

namespace {

const mpz_class five = 5;

QuadExt q5(long a_num, long a_den, long b_num, long b_den) {
    return QuadExt(Rational(a_num, a_den), Rational(b_num, b_den), five);
}

QuadExt random_q5(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return QuadExt(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), five);
}

}  // namespace

TEST_CASE("quadratic extension arithmetic in Q(sqrt(5))") {
    // (1 + sqrt5)(-1 + sqrt5) = 4
    CHECK(q5(1, 1, 1, 1) * q5(-1, 1, 1, 1) == q5(4, 1, 0, 1));
    // (3 + sqrt5)/(3 + sqrt5) = 1
    CHECK(q5(3, 1, 1, 1) / q5(3, 1, 1, 1) == QuadExt::one(five));
    // 1/(3 + sqrt5) = 3/4 - (1/4) sqrt5, with norm 9 - 5 = 4
    CHECK(q5(3, 1, 1, 1).norm() == Rational(4));
    CHECK(QuadExt::one(five) / q5(3, 1, 1, 1) == q5(3, 4, -1, 4));
}

TEST_CASE("quadratic extension powers") {
    CHECK(q5(-3, 1, 1, 1).pow(2) == q5(14, 1, -6, 1));
    CHECK(q5(3, 1, 1, 1).pow(3) == q5(72, 1, 32, 1));
    CHECK(q5(7, 3, -2, 9).pow(0) == QuadExt::one(five));
    CHECK(QuadExt::zero(five).pow(0) == QuadExt::one(five));

    std::mt19937 rng(11712);
    for (int i = 0; i < 40; ++i) {
        QuadExt x = random_q5(rng);
        std::uniform_int_distribution<unsigned long> e(0, 32);
        unsigned long j = e(rng), k = e(rng);
        if (j + k > 32) continue;
        CHECK(x.pow(j + k) == x.pow(j) * x.pow(k));
    }
}

TEST_CASE("rational extraction guards the surd coefficient") {
    CHECK(q5(4, 1, 0, 1).to_rational() == Rational(4));
    CHECK_THROWS_AS(q5(1, 1, 1, 1).to_rational(), SurdNotZero);
    CHECK_THROWS_WITH_AS(q5(0, 1, 7, 3).to_rational(),
                         doctest::Contains("7/3"), SurdNotZero);
}

TEST_CASE("discriminants must agree and be positive non-squares") {
    QuadExt a = q5(1, 1, 1, 1);
    QuadExt b(Rational(1), Rational(1), mpz_class(2));
    CHECK_THROWS_AS(a + b, DiscriminantMismatch);
    CHECK_THROWS_AS(a * b, DiscriminantMismatch);

    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), mpz_class(4)), DomainError);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), mpz_class(9)), DomainError);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), mpz_class(0)), DomainError);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), mpz_class(-5)), DomainError);
}

TEST_CASE("division by zero in the extension is an error") {
    CHECK_THROWS_AS(QuadExt::one(five) / QuadExt::zero(five), wheelmp::DivisionByZero);
}

TEST_CASE("conjugation is a ring homomorphism") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 100; ++i) {
        QuadExt x = random_q5(rng);
        QuadExt y = random_q5(rng);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * x.conj()).surd_part().is_zero());
    }
}

TEST_CASE("field axiom spot checks in Q(sqrt(5))") {
    std::mt19937 rng(90125);
    for (int i = 0; i < 100; ++i) {
        QuadExt x = random_q5(rng);
        QuadExt y = random_q5(rng);
        QuadExt z = random_q5(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x / x == QuadExt::one(five));
        if (!x.is_zero()) CHECK((QuadExt::one(five) / x) * x == QuadExt::one(five));
    }
}

TEST_CASE("quadratic extension render and parse") {
    QuadExt x = q5(3, 4, -1, 4);
    CHECK(x.str() == "3/4 + -1/4*sqrt(5)");
    CHECK(QuadExt::parse(x.str()) == x);
    CHECK(QuadExt::parse("3/4 - 1/4*sqrt(5)") == x);
    CHECK(QuadExt::parse("0 + 1*sqrt(2)") == QuadExt::root(mpz_class(2)));
    CHECK_THROWS_AS(QuadExt::parse("3/4"), wheelmp::ParseError);
    CHECK_THROWS_AS(QuadExt::parse("sqrt(5)"), wheelmp::ParseError);

    std::mt19937 rng(777);
    for (int i = 0; i < 100; ++i) {
        QuadExt v = random_q5(rng);
        CHECK(QuadExt::parse(v.str()) == v);
    }
}
