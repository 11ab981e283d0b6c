#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mns/nested_sum.hpp"
#include "mns/random_instances.hpp"
#include "support/oracles.hpp"

using mns::Mode;
using mns::Rational;
using mns::Sequence;
using mns::SumSpec;

namespace {

const Sequence h1 = mns::harmonic_sequence(1, 20);

}  // namespace

TEST_CASE("matrix evaluator on worked sums") {
    CHECK(mns::evaluate_matrix({{h1}, 3, 1, Mode::weak}) == Rational(11, 6));
    CHECK(mns::evaluate_matrix({{h1, h1}, 2, 1, Mode::weak}) == Rational(7, 4));
    CHECK(mns::evaluate_matrix({{h1, h1}, 3, 1, Mode::strict}) == Rational(1, 2));

    mns::RandomInstances rnd(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Sequence f = rnd.sequence(2), g = rnd.sequence(2);
        CHECK(mns::evaluate_matrix({{f, g}, 2, 1, Mode::strict}).is_zero());
    }
}

TEST_CASE("empty factor list is the indicator of N >= m") {
    CHECK(mns::evaluate_matrix({{}, 5, 2, Mode::weak}) == 1);
    CHECK(mns::evaluate_matrix({{}, 5, 5, Mode::strict}) == 1);
    CHECK(mns::evaluate_bruteforce({{}, 4, 1, Mode::strict}) == 1);
    const auto table = mns::evaluate_table({}, Mode::weak, 4);
    CHECK(table.table == mns::TriMatrix(4, [](std::size_t, std::size_t) { return Rational(1); }));
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(mns::evaluate_matrix({{h1}, 3, 4, Mode::weak}), std::invalid_argument);
    CHECK_THROWS_AS(mns::evaluate_matrix({{h1}, 3, 0, Mode::weak}), std::invalid_argument);
    CHECK_THROWS_AS(mns::evaluate_matrix({{h1.truncated(2)}, 3, 1, Mode::weak}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mns::evaluate_table(std::vector<Sequence>{h1}, Mode::weak, 21),
                    std::invalid_argument);
}

TEST_CASE("brute force on worked sums") {
    CHECK(mns::evaluate_bruteforce({{h1}, 3, 1, Mode::weak}) == Rational(11, 6));
    CHECK(mns::evaluate_bruteforce({{h1, h1}, 2, 1, Mode::weak}) == Rational(7, 4));
    CHECK(mns::evaluate_bruteforce({{h1, h1}, 3, 1, Mode::strict}) == Rational(1, 2));

    const Sequence f({Rational(2), Rational(-1, 3), Rational(5, 7), Rational(1, 9)});
    CHECK(mns::evaluate_bruteforce({{f}, 4, 2, Mode::weak}) ==
          f(2) + f(3) + f(4));
    const Sequence g({Rational(3), Rational(4), Rational(-2, 5), Rational(6)});
    CHECK(mns::evaluate_bruteforce({{f, g, f}, 4, 4, Mode::weak}) == f(4) * g(4) * f(4));
}

TEST_CASE("brute force explosion guard") {
    const SumSpec spec{std::vector<Sequence>(4, h1), 20, 1, Mode::weak};
    CHECK_NOTHROW(mns::evaluate_bruteforce(spec, 160000));
    CHECK_THROWS_AS(mns::evaluate_bruteforce(spec, 159999), mns::ExplosionGuardError);
    const SumSpec big{std::vector<Sequence>(6, mns::harmonic_sequence(1, 400)), 400, 1, Mode::weak};
    CHECK_THROWS_AS(mns::evaluate_bruteforce(big), mns::ExplosionGuardError);
}

TEST_CASE("harmonic sums") {
    const std::vector<long> one{1}, minus_two{-2}, one_one{1, 1};
    CHECK(mns::harmonic_S(one, 2) == Rational(3, 2));
    CHECK(mns::harmonic_S(minus_two, 3) == Rational(-31, 36));
    CHECK(mns::harmonic_S(one_one, 2) == Rational(7, 4));
    CHECK(mns::harmonic_H(one, 3) == Rational(3, 2));
    CHECK(mns::harmonic_H(one_one, 3) == Rational(1, 2));
    CHECK(mns::harmonic_H(std::vector<long>{2, -1, 3}, 3) == 0);

    // Frozen from exact full-box enumeration.
    CHECK(mns::harmonic_S(std::vector<long>{2, 1}, 5) == Rational::parse("388853/216000"));
    CHECK(mns::harmonic_H(std::vector<long>{2, 1}, 5) == Rational(17, 32));
    CHECK(mns::harmonic_S(std::vector<long>{-1, 2, -3}, 6) ==
          Rational::parse("24706055539/46656000000"));
    CHECK_THROWS_AS(mns::harmonic_S(std::vector<long>{1, 0}, 3), std::invalid_argument);
}

TEST_CASE("matrix evaluator matches full-box enumeration") {
    mns::RandomInstances rnd(99);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = rnd.index(1, 8);
        const std::size_t k = rnd.index(0, 4);
        std::vector<Sequence> factors;
        for (std::size_t l = 0; l < k; ++l) factors.push_back(rnd.sequence(n));
        for (Mode mode : {Mode::weak, Mode::strict}) {
            for (std::size_t m = 1; m <= n; ++m) {
                const SumSpec spec{factors, n, m, mode};
                const Rational value = mns::evaluate_matrix(spec);
                CHECK(value.raw() == oracle::box_sum(factors, n, m, mode == Mode::strict));
                CHECK(value == mns::evaluate_bruteforce(spec));
            }
        }
    }
}

TEST_CASE("table entries are the sums at every pair of bounds") {
    mns::RandomInstances rnd(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = rnd.index(1, 10);
        const std::size_t k = rnd.index(0, 3);
        std::vector<Sequence> factors;
        for (std::size_t l = 0; l < k; ++l) factors.push_back(rnd.sequence(n));
        for (Mode mode : {Mode::weak, Mode::strict}) {
            const auto table = mns::evaluate_table(factors, mode, n);
            CHECK(table.mode == mode);
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 1; j <= i; ++j) {
                    CHECK(table.table(i, j) == mns::evaluate_matrix({factors, i, j, mode}));
                    if (mode == Mode::strict && i - j < k) CHECK(table.table(i, j).is_zero());
                }
            }
        }
    }
    const auto harmonic = mns::evaluate_table(std::vector<Sequence>{h1}, Mode::weak, 3);
    CHECK(harmonic.table(1, 1) == 1);
    CHECK(harmonic.table(2, 1) == Rational(3, 2));
    CHECK(harmonic.table(3, 1) == Rational(11, 6));
}

TEST_CASE("single factor: strict upper bound shifts by one") {
    mns::RandomInstances rnd(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = rnd.index(2, 10);
        const std::size_t m = rnd.index(1, n - 1);
        const Sequence f = rnd.sequence(n);
        CHECK(mns::evaluate_matrix({{f}, n, m, Mode::strict}) ==
              mns::evaluate_matrix({{f}, n - 1, m, Mode::weak}));
    }
}

TEST_CASE("streaming convergence") {
    const std::vector<int> zeta3{2, 1};
    const std::vector<std::size_t> end{2000};
    const auto out = mns::converge_stream(zeta3, 2000, end);
    REQUIRE(out.size() == 1);
    double two_zeta3 = 0.0;
    for (int n = 1000000; n >= 1; --n) two_zeta3 += 2.0 / (double(n) * n * n);
    CHECK(std::abs(out[0].value - two_zeta3) < 0.01);

    const std::vector<int> zeta2{2};
    const std::vector<std::size_t> at10000{10000};
    double direct = 0.0;
    for (int n = 1; n <= 10000; ++n) direct += 1.0 / (double(n) * n);
    const double zeta2_value = M_PI * M_PI / 6.0;
    const auto z2 = mns::converge_stream(zeta2, 10000, at10000);
    CHECK(z2[0].value == doctest::Approx(direct).epsilon(1e-14));
    CHECK(std::abs(z2[0].value - zeta2_value) < 1e-3);

    const std::vector<int> three{3};
    const std::vector<std::size_t> at1{1};
    CHECK(mns::converge_stream(three, 1, at1)[0].value == 1.0);

    const std::vector<int> divergent{1, 2};
    CHECK_THROWS_AS(mns::converge_stream(divergent, 10, at1), std::invalid_argument);
    const std::vector<int> bad{2, 0};
    CHECK_THROWS_AS(mns::converge_stream(bad, 10, at1), std::invalid_argument);
}

TEST_CASE("streaming agrees with exact values at small N") {
    const std::vector<std::vector<int>> cases = {{2}, {2, 1}, {3, 1, 2}, {2, 2, 1, 1}};
    for (const auto& exponents : cases) {
        std::vector<std::size_t> points;
        for (std::size_t n = 1; n <= 50; ++n) points.push_back(n);
        const auto stream = mns::converge_stream(exponents, 50, points);
        REQUIRE(stream.size() == 50);
        for (const auto& p : stream) {
            std::vector<Sequence> factors;
            for (int e : exponents) factors.push_back(mns::harmonic_sequence(e, p.n));
            const double exact = mns::evaluate_matrix({factors, p.n, 1, Mode::weak}).to_double();
            CHECK(std::abs(p.value - exact) <= 1e-12 * std::abs(exact));
        }
    }
}

TEST_CASE("checkpoints and CSV") {
    CHECK(mns::geometric_checkpoints(10, 100) == std::vector<std::size_t>{10, 20, 40, 80, 100});
    CHECK(mns::geometric_checkpoints(1, 1) == std::vector<std::size_t>{1});
    const std::vector<mns::ConvergencePoint> points{{1, 1.0}, {10, 1.5497677311665408}};
    CHECK(mns::to_csv(points) == "N,value\n1,1\n10,1.54976773116654\n");
}
