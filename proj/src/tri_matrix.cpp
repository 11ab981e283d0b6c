#include "mns/tri_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace mns {

namespace {

const Rational& zero() {
    static const Rational value;
    return value;
}

void require_same_dim(const TriMatrix& lhs, const TriMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(lhs.dim()) +
                                    " vs " + std::to_string(rhs.dim()));
    }
}

} // namespace

TriMatrix::TriMatrix(std::size_t dim) : TriMatrix(dim, std::vector<Rational>(packed_size(dim))) {}

TriMatrix::TriMatrix(std::size_t dim,
                     const std::function<Rational(std::size_t, std::size_t)>& generator)
    : TriMatrix(dim) {
    auto it = packed_.begin();
    for (std::size_t i = 1; i <= dim; ++i) {
        for (std::size_t j = 1; j <= i; ++j) *it++ = generator(i, j);
    }
}

TriMatrix::TriMatrix(std::size_t dim, std::vector<Rational> packed)
    : dim_(dim), packed_(std::move(packed)) {
    if (dim_ == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    if (packed_.size() != packed_size(dim_)) {
        throw std::invalid_argument("packed storage has " + std::to_string(packed_.size()) +
                                    " entries, expected " + std::to_string(packed_size(dim_)));
    }
}

TriMatrix TriMatrix::from_packed(std::size_t dim, std::vector<Rational> packed) {
    return TriMatrix(dim, std::move(packed));
}

TriMatrix TriMatrix::identity(std::size_t dim) {
    TriMatrix out(dim);
    for (std::size_t i = 1; i <= dim; ++i) out.packed_[offset(i) + i - 1] = 1;
    return out;
}

const Rational& TriMatrix::operator()(std::size_t i, std::size_t j) const {
    return j > i ? zero() : packed_[offset(i) + j - 1];
}

const Rational& TriMatrix::entry(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_) {
        throw std::out_of_range("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside a " + std::to_string(dim_) + "x" +
                                std::to_string(dim_) + " matrix");
    }
    return (*this)(i, j);
}

TriMatrix operator+(const TriMatrix& lhs, const TriMatrix& rhs) {
    require_same_dim(lhs, rhs);
    std::vector<Rational> packed(lhs.packed_);
    for (std::size_t p = 0; p < packed.size(); ++p) packed[p] += rhs.packed_[p];
    return TriMatrix(lhs.dim_, std::move(packed));
}

TriMatrix operator-(const TriMatrix& lhs, const TriMatrix& rhs) {
    require_same_dim(lhs, rhs);
    std::vector<Rational> packed(lhs.packed_);
    for (std::size_t p = 0; p < packed.size(); ++p) packed[p] -= rhs.packed_[p];
    return TriMatrix(lhs.dim_, std::move(packed));
}

TriMatrix scale_columns(const TriMatrix& m, const Sequence& d) {
    if (d.size() != m.dim()) throw std::invalid_argument("diagonal length does not match matrix");
    return TriMatrix(m.dim(), [&](std::size_t i, std::size_t j) { return m(i, j) * d(j); });
}

TriMatrix scale_rows(const Sequence& d, const TriMatrix& m) {
    if (d.size() != m.dim()) throw std::invalid_argument("diagonal length does not match matrix");
    return TriMatrix(m.dim(), [&](std::size_t i, std::size_t j) { return d(i) * m(i, j); });
}

std::vector<Rational> column(const TriMatrix& m, std::size_t j) {
    std::vector<Rational> out(m.dim());
    for (std::size_t i = j; i <= m.dim(); ++i) out[i - 1] = m(i, j);
    return out;
}

} // namespace mns
