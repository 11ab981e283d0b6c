#include "mns/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mns {

Sequence::Sequence(std::vector<Rational> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) throw std::invalid_argument("sequence must have at least one value");
}

Sequence Sequence::constant(std::size_t length, const Rational& value, std::string label) {
    return Sequence(std::vector<Rational>(length, value), std::move(label));
}

const Rational& Sequence::at(std::size_t n) const {
    if (n < 1 || n > values_.size()) {
        throw std::out_of_range("sequence index " + std::to_string(n) + " outside 1.." +
                                std::to_string(values_.size()));
    }
    return values_[n - 1];
}

Sequence Sequence::truncated(std::size_t length) const {
    if (length > values_.size()) {
        throw std::invalid_argument("cannot truncate sequence of length " +
                                    std::to_string(values_.size()) + " to " +
                                    std::to_string(length));
    }
    if (length == values_.size()) return *this;
    return Sequence({values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(length)},
                    label_);
}

Sequence harmonic_sequence(long index, std::size_t length) {
    if (index == 0) throw std::invalid_argument("harmonic index must be nonzero");
    const long power = index < 0 ? -index : index;
    std::vector<Rational> values;
    values.reserve(length);
    for (std::size_t n = 1; n <= length; ++n) {
        Rational term = Rational(static_cast<long>(n)).pow(-power);
        if (index < 0 && n % 2 == 1) term = -term;
        values.push_back(std::move(term));
    }
    return Sequence(std::move(values), "H" + std::to_string(index));
}

Sequence pointwise_product(const Sequence& f, const Sequence& g) {
    if (f.size() != g.size()) {
        throw std::invalid_argument("pointwise product of sequences with lengths " +
                                    std::to_string(f.size()) + " and " +
                                    std::to_string(g.size()));
    }
    std::vector<Rational> values;
    values.reserve(f.size());
    for (std::size_t n = 1; n <= f.size(); ++n) values.push_back(f(n) * g(n));
    std::string label;
    if (!f.label().empty() && !g.label().empty()) label = f.label() + "*" + g.label();
    return Sequence(std::move(values), std::move(label));
}

bool all_distinct(const Sequence& f) {
    std::vector<Rational> sorted(f.values().begin(), f.values().end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool all_nonzero(const Sequence& f) {
    return std::none_of(f.values().begin(), f.values().end(),
                        [](const Rational& x) { return x.is_zero(); });
}

Sequence parse_sequence_list(std::string_view text) {
    std::vector<Rational> values;
    while (true) {
        const auto comma = text.find(',');
        values.push_back(Rational::parse(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Sequence(std::move(values));
}

Sequence parse_sequence_lines(std::string_view text) {
    std::vector<Rational> values;
    while (!text.empty()) {
        const auto newline = text.find('\n');
        const std::string_view line = text.substr(0, newline);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            values.push_back(Rational::parse(line));
        }
        if (newline == std::string_view::npos) break;
        text.remove_prefix(newline + 1);
    }
    if (values.empty()) throw std::invalid_argument("sequence file contains no values");
    return Sequence(std::move(values));
}

std::string to_string(const Sequence& f) {
    std::string out = "(";
    for (std::size_t n = 1; n <= f.size(); ++n) {
        if (n > 1) out += ", ";
        out += f(n).str();
    }
    return out + ")";
}

} // namespace mns
