#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mns/identity_report.hpp"
#include "mns/rational.hpp"

namespace mns {

using SquareMatrix = std::vector<std::vector<Rational>>;

/// Leftward walk on sites 1..N. From site l the walker jumps to each of
/// 1..l with probability 1/l^a; for a > 1 the remaining mass 1 - 1/l^{a-1}
/// goes to an extra absorbing state R (index N+1). Site 1 is absorbing.
class WalkChain {
public:
    WalkChain(std::size_t sites, int exponent);

    std::size_t sites() const { return sites_; }
    int exponent() const { return exponent_; }
    bool has_sink() const { return exponent_ > 1; }
    /// N, or N + 1 when the sink R is present.
    std::size_t states() const { return transition_.size(); }

    /// P(from -> to), 1-based over states(); state N+1 is R.
    const Rational& probability(std::size_t from, std::size_t to) const;

    const SquareMatrix& transition() const { return transition_; }

private:
    std::size_t sites_;
    int exponent_;
    SquareMatrix transition_;
};

/// Throws std::invalid_argument for N < 1 or a < 1.
WalkChain build_chain(std::size_t sites, int exponent);

/// Exact matrix power of the full transition matrix (dense, O(s^3) per step).
SquareMatrix chain_power(const WalkChain& chain, std::size_t power);

/// ((S_{H_a})^{k+1})_{N,1}: probability of sitting at site 1 after exactly
/// k+1 steps from site N.
Rational absorption_probability_exact(std::size_t sites, int exponent, std::size_t k);

struct MonteCarloEstimate {
    double estimate;
    double standard_error;
    std::uint64_t samples;
    std::uint64_t seed;
};

/// Samples per independently seeded chunk; part of the reproducibility contract.
inline constexpr std::uint64_t kMonteCarloChunk = 1u << 16;

/// Simulates `samples` independent (k+1)-step walks from site N and returns
/// the fraction that end at site 1 with its binomial standard error.
/// Deterministic in (seed, samples); chunks may run on several threads.
MonteCarloEstimate absorption_probability_montecarlo(std::size_t sites, int exponent,
                                                     std::size_t k, std::uint64_t samples,
                                                     std::uint64_t seed);

/// N^a ((S_{H_a})^{k+1})_{N,1} against S(H_a, ..., H_a [k copies]; N, 1).
IdentityReport verify_walk_identity(std::size_t sites, int exponent, std::size_t k);

} // namespace mns
