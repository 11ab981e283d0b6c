#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "mns/rational.hpp"
#include "mns/sequence.hpp"
#include "mns/tri_matrix.hpp"

namespace mns {

/// Lazily described lower-triangular matrix.
///
/// The index matrices S_f and A_f, the shift matrix and the all-ones prefix
/// matrix are stored as O(N) descriptions. Multiplying by one of them on the
/// right costs O(N^2) via a running row sum instead of the O(N^3) dense
/// triangular product.
class StructuredMatrix {
public:
    enum class Kind { index_s, index_a, shift, prefix, dense };

    /// Row i holds f(i) in columns 1..i.
    static StructuredMatrix index_s(Sequence f);
    /// S_f shifted down one row: entry (i, j) = f(i-1) for j <= i-1.
    static StructuredMatrix index_a(Sequence f);
    /// Ones on the first subdiagonal.
    static StructuredMatrix shift(std::size_t dim);
    /// Ones on and below the diagonal.
    static StructuredMatrix prefix(std::size_t dim);
    static StructuredMatrix dense(TriMatrix m);

    Kind kind() const;
    std::size_t dim() const { return dim_; }

    /// The defining sequence for index_s / index_a, nullptr otherwise.
    const Sequence* sequence() const;
    /// The stored matrix for dense, nullptr otherwise.
    const TriMatrix* matrix() const;

    TriMatrix materialize() const;

private:
    struct IndexS { Sequence f; };
    struct IndexA { Sequence f; };
    struct Shift {};
    struct Prefix {};
    using Repr = std::variant<IndexS, IndexA, Shift, Prefix, TriMatrix>;

    StructuredMatrix(std::size_t dim, Repr repr) : dim_(dim), repr_(std::move(repr)) {}

    std::size_t dim_;
    Repr repr_;
};

StructuredMatrix build_S(const Sequence& f);
StructuredMatrix build_A(const Sequence& f);
StructuredMatrix build_shift(std::size_t dim);
StructuredMatrix build_prefix(std::size_t dim);

/// Exact product. A structured right factor uses the row recurrence
/// (M S_f)(i,j) = (M S_f)(i,j+1) + M(i,j) f(j), evaluated from the diagonal
/// leftwards. All overloads throw std::invalid_argument on a dimension mismatch.
TriMatrix multiply(const TriMatrix& left, const StructuredMatrix& right);
/// Structured left factor: column prefix sums, O(N^2).
TriMatrix multiply(const StructuredMatrix& left, const TriMatrix& right);
TriMatrix multiply(const StructuredMatrix& left, const StructuredMatrix& right);
/// Plain O(N^3) triangular product.
TriMatrix multiply(const TriMatrix& left, const TriMatrix& right);

/// Row vector times matrix: out(j) = sum_{l >= j} row(l) M(l, j).
/// O(N) for structured kinds. Both spans are indexed from column 1.
std::vector<Rational> row_times(std::span<const Rational> row, const StructuredMatrix& right);

} // namespace mns
