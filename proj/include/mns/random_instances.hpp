#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mns/rational.hpp"
#include "mns/sequence.hpp"

namespace mns {

/// Generators for randomized identity checks. Numerators and denominators
/// are drawn from [-bound, bound] \ {0} (denominators positive).
class RandomInstances {
public:
    explicit RandomInstances(std::uint64_t seed, long bound = 9) : rng_(seed), bound_(bound) {}

    /// Uniform integer in [lo, hi].
    std::size_t index(std::size_t lo, std::size_t hi);

    /// p/q with p in [-bound, bound] \ {0} and q in [1, bound].
    Rational nonzero_rational();
    /// As nonzero_rational, but zero with probability 1/(2 bound + 1).
    Rational rational();

    Sequence sequence(std::size_t length);
    Sequence nonzero_sequence(std::size_t length);
    Sequence distinct_nonzero_sequence(std::size_t length);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    long bound_;
};

} // namespace mns
