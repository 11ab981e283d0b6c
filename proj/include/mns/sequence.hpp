#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mns/rational.hpp"

namespace mns {

/// A finite sequence f(1), ..., f(N) of exact values, indexed from 1.
class Sequence {
public:
    /// Throws std::invalid_argument if `values` is empty.
    explicit Sequence(std::vector<Rational> values, std::string label = {});

    static Sequence constant(std::size_t length, const Rational& value, std::string label = {});

    std::size_t size() const { return values_.size(); }

    /// f(n), 1-based, unchecked.
    const Rational& operator()(std::size_t n) const { return values_[n - 1]; }

    /// f(n), 1-based; throws std::out_of_range outside 1..N.
    const Rational& at(std::size_t n) const;

    std::span<const Rational> values() const { return values_; }
    const std::string& label() const { return label_; }

    /// First `length` values. Throws std::invalid_argument if longer than size().
    Sequence truncated(std::size_t length) const;

    friend bool operator==(const Sequence& lhs, const Sequence& rhs) {
        return lhs.values_ == rhs.values_;
    }

private:
    std::vector<Rational> values_;
    std::string label_;
};

/// f(n) = sgn(i)^n / n^|i| for n = 1..length. Rejects i = 0.
Sequence harmonic_sequence(long index, std::size_t length);

/// (fg)(n) = f(n) g(n). Throws std::invalid_argument on a length mismatch.
Sequence pointwise_product(const Sequence& f, const Sequence& g);

bool all_distinct(const Sequence& f);
bool all_nonzero(const Sequence& f);

/// Parses comma-separated rationals ("1,1/2,-3").
Sequence parse_sequence_list(std::string_view text);

/// One rational per line, blank lines ignored.
Sequence parse_sequence_lines(std::string_view text);

std::string to_string(const Sequence& f);

} // namespace mns
