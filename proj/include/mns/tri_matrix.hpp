#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mns/rational.hpp"
#include "mns/sequence.hpp"

namespace mns {

/// Dense lower-triangular N x N matrix with packed storage.
///
/// Only entries (i, j) with i >= j are stored (N(N+1)/2 values, row-major);
/// everything above the diagonal is zero by construction. All public
/// indices are 1-based.
class TriMatrix {
public:
    /// The N x N zero matrix. Throws std::invalid_argument for N = 0.
    explicit TriMatrix(std::size_t dim);

    /// Entry (i, j) = generator(i, j) for i >= j.
    TriMatrix(std::size_t dim, const std::function<Rational(std::size_t, std::size_t)>& generator);

    /// Adopts packed row-major storage; `packed.size()` must be N(N+1)/2.
    static TriMatrix from_packed(std::size_t dim, std::vector<Rational> packed);

    static TriMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    /// Unchecked 1-based access; returns zero above the diagonal.
    const Rational& operator()(std::size_t i, std::size_t j) const;

    /// Checked 1-based access; throws std::out_of_range outside 1..N.
    const Rational& entry(std::size_t i, std::size_t j) const;

    /// Row i restricted to columns 1..i.
    std::span<const Rational> row(std::size_t i) const {
        return {packed_.data() + offset(i), i};
    }

    std::span<const Rational> packed() const { return packed_; }

    static std::size_t packed_size(std::size_t dim) { return dim * (dim + 1) / 2; }
    static std::size_t offset(std::size_t row) { return row * (row - 1) / 2; }

    friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

    friend TriMatrix operator+(const TriMatrix& lhs, const TriMatrix& rhs);
    friend TriMatrix operator-(const TriMatrix& lhs, const TriMatrix& rhs);

private:
    TriMatrix(std::size_t dim, std::vector<Rational> packed);

    std::size_t dim_;
    std::vector<Rational> packed_;
};

/// M diag(d): column j scaled by d(j).
TriMatrix scale_columns(const TriMatrix& m, const Sequence& d);

/// diag(d) M: row i scaled by d(i).
TriMatrix scale_rows(const Sequence& d, const TriMatrix& m);

/// Column j of M as a length-N vector (1-based column index).
std::vector<Rational> column(const TriMatrix& m, std::size_t j);

} // namespace mns
