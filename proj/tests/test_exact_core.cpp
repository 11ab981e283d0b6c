#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mns/random_instances.hpp"
#include "mns/rational.hpp"
#include "mns/sequence.hpp"

using mns::Rational;
using mns::Sequence;

namespace {

Sequence seq(std::initializer_list<Rational> values) { return Sequence(values); }

}  // namespace

TEST_CASE("rational canonical form and text") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse("-31/36") == Rational(-31, 36));
    CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
    CHECK(Rational::parse("+7").str() == "7");
    CHECK(Rational(-4, 6).denominator() == 3);

    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational() / Rational(), std::domain_error);
    CHECK_THROWS_AS(Rational().reciprocal(), std::domain_error);
}

TEST_CASE("rational powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-1, 2).pow(0) == Rational(1));
    CHECK(Rational(-2).pow(-3) == Rational(-1, 8));
}

TEST_CASE("rational field axioms hold on random values") {
    mns::RandomInstances rnd(11, 50);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational x = rnd.rational();
        const Rational y = rnd.rational();
        const Rational z = rnd.rational();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.reciprocal() == Rational(1));
        Rational acc = x;
        acc.add_product(y, z);
        CHECK(acc == x + y * z);
        // Canonical form: the numerator and denominator are coprime.
        const Rational r = x * y + z;
        CHECK(gcd(r.numerator(), r.denominator()) == 1);
        CHECK(r.denominator() > 0);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("harmonic sequences") {
    CHECK(mns::harmonic_sequence(1, 3) == seq({1, Rational(1, 2), Rational(1, 3)}));
    CHECK(mns::harmonic_sequence(-1, 2) == seq({-1, Rational(1, 2)}));
    CHECK(mns::harmonic_sequence(-2, 3) == seq({-1, Rational(1, 4), Rational(-1, 9)}));
    CHECK(mns::harmonic_sequence(3, 2) == seq({1, Rational(1, 8)}));
    CHECK_THROWS_AS(mns::harmonic_sequence(0, 3), std::invalid_argument);
}

TEST_CASE("pointwise product") {
    const Sequence h = seq({1, Rational(1, 2)});
    CHECK(mns::pointwise_product(h, h) == seq({1, Rational(1, 4)}));
    CHECK(mns::pointwise_product(seq({1, 2, 3}), seq({1, 1, 1})) == seq({1, 2, 3}));
    CHECK(mns::pointwise_product(mns::harmonic_sequence(1, 3), mns::harmonic_sequence(-2, 3)) ==
          seq({-1, Rational(1, 8), Rational(-1, 27)}));
    CHECK_THROWS_AS(mns::pointwise_product(seq({1}), seq({1, 2})), std::invalid_argument);
}

TEST_CASE("distinctness") {
    CHECK(mns::all_distinct(seq({1, Rational(1, 2), Rational(1, 3)})));
    CHECK_FALSE(mns::all_distinct(seq({1, 1, 2})));
    CHECK(mns::all_distinct(seq({2, 1})));
    CHECK_FALSE(mns::all_distinct(seq({Rational(2, 4), 3, Rational(1, 2)})));
}

TEST_CASE("sequence construction and access") {
    CHECK_THROWS_AS(Sequence(std::vector<Rational>{}), std::invalid_argument);
    const Sequence f = seq({5, 0, Rational(-1, 3)});
    CHECK(f.at(3) == Rational(-1, 3));
    CHECK_THROWS_AS(f.at(0), std::out_of_range);
    CHECK_THROWS_AS(f.at(4), std::out_of_range);
    CHECK(f.truncated(2) == seq({5, 0}));
    CHECK_THROWS_AS(f.truncated(4), std::invalid_argument);
    CHECK_FALSE(mns::all_nonzero(f));
}

TEST_CASE("sequence text formats") {
    CHECK(mns::parse_sequence_list("1, 1/2,-3") == seq({1, Rational(1, 2), -3}));
    CHECK(mns::parse_sequence_lines("1\n\n  2/4\r\n-3\n\n") == seq({1, Rational(1, 2), -3}));
    CHECK_THROWS_AS(mns::parse_sequence_lines("\n\n"), std::invalid_argument);
    CHECK_THROWS_AS(mns::parse_sequence_list("1,,2"), std::invalid_argument);
}
