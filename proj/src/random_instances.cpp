#include "mns/random_instances.hpp"

#include <stdexcept>
#include <vector>

namespace mns {

std::size_t RandomInstances::index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Rational RandomInstances::nonzero_rational() {
    std::uniform_int_distribution<long> magnitude(1, bound_);
    const long num = std::bernoulli_distribution(0.5)(rng_) ? magnitude(rng_) : -magnitude(rng_);
    return Rational(num, magnitude(rng_));
}

Rational RandomInstances::rational() {
    if (std::uniform_int_distribution<long>(0, 2 * bound_)(rng_) == 0) return Rational();
    return nonzero_rational();
}

Sequence RandomInstances::sequence(std::size_t length) {
    std::vector<Rational> values;
    for (std::size_t n = 0; n < length; ++n) values.push_back(rational());
    return Sequence(std::move(values));
}

Sequence RandomInstances::nonzero_sequence(std::size_t length) {
    std::vector<Rational> values;
    for (std::size_t n = 0; n < length; ++n) values.push_back(nonzero_rational());
    return Sequence(std::move(values));
}

Sequence RandomInstances::distinct_nonzero_sequence(std::size_t length) {
    std::vector<Rational> values;
    for (int attempt = 0; values.size() < length; ++attempt) {
        if (attempt > 100000) throw std::runtime_error("could not draw distinct rationals");
        Rational candidate = nonzero_rational();
        bool fresh = true;
        for (const Rational& v : values) fresh = fresh && v != candidate;
        if (fresh) values.push_back(std::move(candidate));
    }
    return Sequence(std::move(values));
}

} // namespace mns
