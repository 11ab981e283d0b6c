#include "mns/random_walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "mns/index_matrix.hpp"
#include "mns/nested_sum.hpp"
#include "mns/sequence.hpp"

namespace mns {

namespace {

// Row CDFs in double precision, converted once from the exact chain.
struct SamplingTable {
    std::vector<std::vector<double>> cdf;  // cdf[state - 1][t - 1] = P(state -> <= t)
};

SamplingTable sampling_table(const WalkChain& chain) {
    SamplingTable table;
    table.cdf.resize(chain.states());
    for (std::size_t s = 1; s <= chain.states(); ++s) {
        auto& row = table.cdf[s - 1];
        row.reserve(chain.states());
        Rational running;
        for (std::size_t t = 1; t <= chain.states(); ++t) {
            running += chain.probability(s, t);
            row.push_back(running.to_double());
        }
        row.back() = 1.0;
    }
    return table;
}

std::uint64_t simulate_chunk(const SamplingTable& table, std::size_t start, std::size_t steps,
                             std::uint64_t walks, std::uint64_t seed, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const std::size_t sites = start;
    std::uint64_t hits = 0;
    for (std::uint64_t w = 0; w < walks; ++w) {
        std::size_t state = start;
        for (std::size_t step = 0; step < steps; ++step) {
            // Site 1 and the sink R both self-loop with probability one.
            if (state == 1 || state > sites) break;
            const auto& row = table.cdf[state - 1];
            const double u = uniform(rng);
            state = static_cast<std::size_t>(std::upper_bound(row.begin(), row.end(), u) -
                                             row.begin()) + 1;
            state = std::min(state, row.size());
        }
        if (state == 1) ++hits;
    }
    return hits;
}

} // namespace

WalkChain::WalkChain(std::size_t sites, int exponent) : sites_(sites), exponent_(exponent) {
    if (sites < 1) throw std::invalid_argument("walk needs at least one site");
    if (exponent < 1) throw std::invalid_argument("walk exponent a must be >= 1");
    const std::size_t states = has_sink() ? sites + 1 : sites;
    transition_.assign(states, std::vector<Rational>(states));
    for (std::size_t l = 1; l <= sites; ++l) {
        const Rational step = Rational(static_cast<long>(l)).pow(-exponent);
        for (std::size_t j = 1; j <= l; ++j) transition_[l - 1][j - 1] = step;
        if (has_sink()) {
            transition_[l - 1][sites] =
                Rational(1) - Rational(static_cast<long>(l)).pow(1 - exponent);
        }
    }
    if (has_sink()) transition_[sites][sites] = 1;
}

const Rational& WalkChain::probability(std::size_t from, std::size_t to) const {
    if (from < 1 || to < 1 || from > states() || to > states()) {
        throw std::out_of_range("walk state outside 1.." + std::to_string(states()));
    }
    return transition_[from - 1][to - 1];
}

WalkChain build_chain(std::size_t sites, int exponent) {
    return WalkChain(sites, exponent);
}

SquareMatrix chain_power(const WalkChain& chain, std::size_t power) {
    const std::size_t s = chain.states();
    SquareMatrix result(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i) result[i][i] = 1;
    const SquareMatrix& step = chain.transition();
    for (std::size_t p = 0; p < power; ++p) {
        SquareMatrix next(s, std::vector<Rational>(s));
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t l = 0; l < s; ++l) {
                if (result[i][l].is_zero()) continue;
                for (std::size_t j = 0; j < s; ++j) next[i][j].add_product(result[i][l], step[l][j]);
            }
        }
        result = std::move(next);
    }
    return result;
}

Rational absorption_probability_exact(std::size_t sites, int exponent, std::size_t k) {
    if (sites < 1) throw std::invalid_argument("walk needs at least one site");
    if (exponent < 1) throw std::invalid_argument("walk exponent a must be >= 1");
    const StructuredMatrix step = build_S(harmonic_sequence(exponent, sites));
    std::vector<Rational> row(sites);
    row[sites - 1] = 1;
    for (std::size_t p = 0; p <= k; ++p) row = row_times(row, step);
    return row[0];
}

MonteCarloEstimate absorption_probability_montecarlo(std::size_t sites, int exponent,
                                                     std::size_t k, std::uint64_t samples,
                                                     std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    const SamplingTable table = sampling_table(build_chain(sites, exponent));
    const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
    std::vector<std::uint64_t> hits(chunks, 0);

    const auto run = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t c = first; c < chunks; c += stride) {
            const std::uint64_t walks = std::min(kMonteCarloChunk, samples - c * kMonteCarloChunk);
            hits[c] = simulate_chunk(table, sites, k + 1, walks, seed, c);
        }
    };
    const std::uint64_t workers =
        std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, chunks);
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    }

    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(total) / n;
    return {p, std::sqrt(p * (1.0 - p) / n), samples, seed};
}

IdentityReport verify_walk_identity(std::size_t sites, int exponent, std::size_t k) {
    IdentityReport report{"walk", {{"N", sites}, {"a", exponent}, {"k", k}}, {}, {}};
    const Rational scale = Rational(static_cast<long>(sites)).pow(exponent);
    report.lhs = {scale * absorption_probability_exact(sites, exponent, k)};
    report.rhs = {evaluate_matrix({std::vector<Sequence>(k, harmonic_sequence(exponent, sites)),
                                   sites, 1, Mode::weak})};
    return report;
}

} // namespace mns
