#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mns/index_matrix.hpp"
#include "mns/json_io.hpp"
#include "mns/nested_sum.hpp"
#include "mns/random_walk.hpp"

using mns::Rational;

namespace {

std::vector<Rational> row_of(const mns::WalkChain& chain, std::size_t s) {
    return chain.transition()[s - 1];
}

}  // namespace

TEST_CASE("chain for a = 1 is S_{H_1}") {
    const auto chain = mns::build_chain(2, 1);
    CHECK_FALSE(chain.has_sink());
    CHECK(chain.states() == 2);
    CHECK(row_of(chain, 1) == std::vector<Rational>{1, 0});
    CHECK(row_of(chain, 2) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    const auto five = mns::build_chain(5, 1);
    for (std::size_t l = 1; l <= 5; ++l)
        for (std::size_t j = 1; j <= 5; ++j)
            CHECK(five.probability(l, j) == (j <= l ? Rational(1, static_cast<long>(l)) : Rational()));
}

TEST_CASE("chain for a > 1 has a sink") {
    const auto chain = mns::build_chain(2, 2);
    CHECK(chain.has_sink());
    CHECK(row_of(chain, 1) == std::vector<Rational>{1, 0, 0});
    CHECK(row_of(chain, 2) == std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)});
    CHECK(row_of(chain, 3) == std::vector<Rational>{0, 0, 1});
    CHECK_THROWS_AS(chain.probability(4, 1), std::out_of_range);
    CHECK_THROWS_AS(mns::build_chain(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mns::build_chain(3, 0), std::invalid_argument);
}

TEST_CASE("chains are row-stochastic") {
    for (std::size_t n = 1; n <= 50; ++n) {
        for (int a = 1; a <= 4; ++a) {
            const auto chain = mns::build_chain(n, a);
            for (std::size_t s = 1; s <= chain.states(); ++s) {
                Rational total;
                for (std::size_t t = 1; t <= chain.states(); ++t) {
                    const Rational& p = chain.probability(s, t);
                    CHECK(p >= 0);
                    CHECK(p <= 1);
                    total += p;
                }
                CHECK(total == 1);
            }
        }
    }
}

TEST_CASE("sink never feeds back into the site block") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int a = 2; a <= 3; ++a) {
            const auto chain = mns::build_chain(n, a);
            const auto s = mns::build_S(mns::harmonic_sequence(a, n));
            mns::TriMatrix power = mns::TriMatrix::identity(n);
            for (std::size_t p = 1; p <= 4; ++p) {
                power = mns::multiply(power, s);
                const auto full = mns::chain_power(chain, p);
                for (std::size_t i = 1; i <= n; ++i)
                    for (std::size_t j = 1; j <= n; ++j) CHECK(full[i - 1][j - 1] == power(i, j));
                CHECK(full[n][n] == 1);
            }
        }
    }
}

TEST_CASE("exact absorption probabilities") {
    CHECK(mns::absorption_probability_exact(2, 1, 1) == Rational(3, 4));
    CHECK(mns::absorption_probability_exact(2, 2, 1) == Rational(5, 16));
    CHECK(mns::absorption_probability_exact(5, 2, 2) == Rational::parse("20881861/324000000"));
    for (int a = 1; a <= 3; ++a)
        for (std::size_t k = 0; k <= 4; ++k) CHECK(mns::absorption_probability_exact(1, a, k) == 1);
    // Against the dense chain power.
    for (std::size_t n = 1; n <= 6; ++n)
        for (int a = 1; a <= 3; ++a)
            for (std::size_t k = 0; k <= 3; ++k)
                CHECK(mns::absorption_probability_exact(n, a, k) ==
                      mns::chain_power(mns::build_chain(n, a), k + 1)[n - 1][0]);
}

TEST_CASE("walk identities") {
    for (std::size_t n = 1; n <= 20; ++n) {
        for (std::size_t k = 0; k <= 5; ++k) {
            const std::vector<long> ones(k, 1);
            CHECK(Rational(static_cast<long>(n)) * mns::absorption_probability_exact(n, 1, k) ==
                  mns::harmonic_S(ones, n));
        }
    }
    for (std::size_t n = 1; n <= 12; ++n)
        for (int a = 1; a <= 3; ++a)
            for (std::size_t k = 0; k <= 4; ++k) CHECK(mns::verify_walk_identity(n, a, k).equal());
}

TEST_CASE("Monte Carlo estimates") {
    const auto one = mns::absorption_probability_montecarlo(1, 3, 4, 1000, 9);
    CHECK(one.estimate == 1.0);
    CHECK(one.standard_error == 0.0);

    const auto mc = mns::absorption_probability_montecarlo(2, 1, 1, 200000, 42);
    CHECK(std::abs(mc.estimate - 0.75) <= 4 * mc.standard_error);
    CHECK(mc.standard_error == doctest::Approx(std::sqrt(mc.estimate * (1 - mc.estimate) / 200000)));

    const auto again = mns::absorption_probability_montecarlo(2, 1, 1, 200000, 42);
    CHECK(again.estimate == mc.estimate);
    const auto other = mns::absorption_probability_montecarlo(2, 1, 1, 200000, 43);
    CHECK(other.estimate != mc.estimate);

    const double exact = mns::absorption_probability_exact(5, 2, 2).to_double();
    const auto sinked = mns::absorption_probability_montecarlo(5, 2, 2, 300000, 5);
    CHECK(std::abs(sinked.estimate - exact) <= 4 * sinked.standard_error);

    CHECK_THROWS_AS(mns::absorption_probability_montecarlo(2, 1, 1, 0, 1), std::invalid_argument);

    const auto j = mns::to_json(Rational(3, 4), mc);
    CHECK(j["exact"] == "3/4");
    CHECK(j["samples"] == 200000);
    CHECK(j["seed"] == 42);
}
