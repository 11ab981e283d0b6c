#include "mns/index_matrix.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>

namespace mns {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_same_dim(std::size_t lhs, std::size_t rhs) {
    if (lhs != rhs) {
        throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(lhs) + " vs " +
                                    std::to_string(rhs));
    }
}

// out(i, j) = sum_{l=j}^{i} left(i, l) right(l, j)
TriMatrix dense_product(const TriMatrix& left, const TriMatrix& right) {
    const std::size_t n = left.dim();
    std::vector<Rational> out(TriMatrix::packed_size(n));
    for (std::size_t i = 1; i <= n; ++i) {
        const auto lrow = left.row(i);
        for (std::size_t j = 1; j <= i; ++j) {
            Rational& acc = out[TriMatrix::offset(i) + j - 1];
            for (std::size_t l = j; l <= i; ++l) acc.add_product(lrow[l - 1], right(l, j));
        }
    }
    return TriMatrix::from_packed(n, std::move(out));
}

// Row recurrence for a structured right factor. Each output row is a
// right-to-left running sum over the corresponding row of `left`.
TriMatrix right_structured(const TriMatrix& left, const StructuredMatrix& right) {
    const std::size_t n = left.dim();
    std::vector<Rational> out(TriMatrix::packed_size(n));
    const Sequence* f = right.sequence();
    for (std::size_t i = 1; i <= n; ++i) {
        const auto lrow = left.row(i);
        Rational* orow = out.data() + TriMatrix::offset(i);
        switch (right.kind()) {
        case StructuredMatrix::Kind::index_s: {
            Rational acc;
            for (std::size_t j = i; j >= 1; --j) {
                acc.add_product(lrow[j - 1], (*f)(j));
                orow[j - 1] = acc;
            }
            break;
        }
        case StructuredMatrix::Kind::index_a: {
            // (M A_f)(i, j) = (M A_f)(i, j+1) + M(i, j+1) f(j), zero on the diagonal.
            Rational acc;
            for (std::size_t j = i - 1; j >= 1; --j) {
                acc.add_product(lrow[j], (*f)(j));
                orow[j - 1] = acc;
            }
            break;
        }
        case StructuredMatrix::Kind::prefix: {
            Rational acc;
            for (std::size_t j = i; j >= 1; --j) {
                acc += lrow[j - 1];
                orow[j - 1] = acc;
            }
            break;
        }
        case StructuredMatrix::Kind::shift:
            for (std::size_t j = 1; j < i; ++j) orow[j - 1] = lrow[j];
            break;
        case StructuredMatrix::Kind::dense:
            break;
        }
    }
    return TriMatrix::from_packed(n, std::move(out));
}

// Column prefix sums for a structured left factor:
// (S_f M)(i, j) = f(i) * sum_{l=j}^{i} M(l, j).
TriMatrix left_structured(const StructuredMatrix& left, const TriMatrix& right) {
    const std::size_t n = right.dim();
    std::vector<Rational> out(TriMatrix::packed_size(n));
    std::vector<Rational> column_sums(n);
    const Sequence* f = left.sequence();
    for (std::size_t i = 1; i <= n; ++i) {
        Rational* orow = out.data() + TriMatrix::offset(i);
        switch (left.kind()) {
        case StructuredMatrix::Kind::index_s:
        case StructuredMatrix::Kind::prefix: {
            const auto rrow = right.row(i);
            for (std::size_t j = 1; j <= i; ++j) {
                column_sums[j - 1] += rrow[j - 1];
                orow[j - 1] = f ? column_sums[j - 1] * (*f)(i) : column_sums[j - 1];
            }
            break;
        }
        case StructuredMatrix::Kind::index_a: {
            // Row i of Delta S_f M is row i-1 of S_f M.
            if (i == 1) break;
            const auto rrow = right.row(i - 1);
            for (std::size_t j = 1; j < i; ++j) {
                column_sums[j - 1] += rrow[j - 1];
                orow[j - 1] = column_sums[j - 1] * (*f)(i - 1);
            }
            break;
        }
        case StructuredMatrix::Kind::shift: {
            if (i == 1) break;
            const auto rrow = right.row(i - 1);
            for (std::size_t j = 1; j < i; ++j) orow[j - 1] = rrow[j - 1];
            break;
        }
        case StructuredMatrix::Kind::dense:
            break;
        }
    }
    return TriMatrix::from_packed(n, std::move(out));
}

} // namespace

StructuredMatrix StructuredMatrix::index_s(Sequence f) {
    const std::size_t n = f.size();
    return StructuredMatrix(n, IndexS{std::move(f)});
}

StructuredMatrix StructuredMatrix::index_a(Sequence f) {
    const std::size_t n = f.size();
    return StructuredMatrix(n, IndexA{std::move(f)});
}

StructuredMatrix StructuredMatrix::shift(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    return StructuredMatrix(dim, Shift{});
}

StructuredMatrix StructuredMatrix::prefix(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    return StructuredMatrix(dim, Prefix{});
}

StructuredMatrix StructuredMatrix::dense(TriMatrix m) {
    const std::size_t n = m.dim();
    return StructuredMatrix(n, std::move(m));
}

StructuredMatrix::Kind StructuredMatrix::kind() const {
    return std::visit(overloaded{
                          [](const IndexS&) { return Kind::index_s; },
                          [](const IndexA&) { return Kind::index_a; },
                          [](const Shift&) { return Kind::shift; },
                          [](const Prefix&) { return Kind::prefix; },
                          [](const TriMatrix&) { return Kind::dense; },
                      },
                      repr_);
}

const Sequence* StructuredMatrix::sequence() const {
    if (const auto* s = std::get_if<IndexS>(&repr_)) return &s->f;
    if (const auto* a = std::get_if<IndexA>(&repr_)) return &a->f;
    return nullptr;
}

const TriMatrix* StructuredMatrix::matrix() const {
    return std::get_if<TriMatrix>(&repr_);
}

TriMatrix StructuredMatrix::materialize() const {
    return std::visit(
        overloaded{
            [&](const IndexS& s) {
                return TriMatrix(dim_, [&](std::size_t i, std::size_t) { return s.f(i); });
            },
            [&](const IndexA& a) {
                return TriMatrix(dim_, [&](std::size_t i, std::size_t j) {
                    return j < i ? a.f(i - 1) : Rational();
                });
            },
            [&](const Shift&) {
                return TriMatrix(dim_, [](std::size_t i, std::size_t j) {
                    return Rational(j + 1 == i ? 1 : 0);
                });
            },
            [&](const Prefix&) {
                return TriMatrix(dim_, [](std::size_t, std::size_t) { return Rational(1); });
            },
            [](const TriMatrix& m) { return m; },
        },
        repr_);
}

StructuredMatrix build_S(const Sequence& f) { return StructuredMatrix::index_s(f); }
StructuredMatrix build_A(const Sequence& f) { return StructuredMatrix::index_a(f); }
StructuredMatrix build_shift(std::size_t dim) { return StructuredMatrix::shift(dim); }
StructuredMatrix build_prefix(std::size_t dim) { return StructuredMatrix::prefix(dim); }

TriMatrix multiply(const TriMatrix& left, const StructuredMatrix& right) {
    require_same_dim(left.dim(), right.dim());
    if (const TriMatrix* dense = right.matrix()) return dense_product(left, *dense);
    return right_structured(left, right);
}

TriMatrix multiply(const StructuredMatrix& left, const TriMatrix& right) {
    require_same_dim(left.dim(), right.dim());
    if (const TriMatrix* dense = left.matrix()) return dense_product(*dense, right);
    return left_structured(left, right);
}

TriMatrix multiply(const StructuredMatrix& left, const StructuredMatrix& right) {
    require_same_dim(left.dim(), right.dim());
    if (const TriMatrix* dense = right.matrix()) return multiply(left, *dense);
    if (const TriMatrix* dense = left.matrix()) return right_structured(*dense, right);
    return right_structured(left.materialize(), right);
}

TriMatrix multiply(const TriMatrix& left, const TriMatrix& right) {
    require_same_dim(left.dim(), right.dim());
    return dense_product(left, right);
}

std::vector<Rational> row_times(std::span<const Rational> row, const StructuredMatrix& right) {
    const std::size_t n = right.dim();
    require_same_dim(row.size(), n);
    std::vector<Rational> out(n);
    const Sequence* f = right.sequence();
    switch (right.kind()) {
    case StructuredMatrix::Kind::index_s: {
        Rational acc;
        for (std::size_t j = n; j >= 1; --j) {
            acc.add_product(row[j - 1], (*f)(j));
            out[j - 1] = acc;
        }
        break;
    }
    case StructuredMatrix::Kind::index_a: {
        Rational acc;
        for (std::size_t j = n - 1; j >= 1; --j) {
            acc.add_product(row[j], (*f)(j));
            out[j - 1] = acc;
        }
        break;
    }
    case StructuredMatrix::Kind::prefix: {
        Rational acc;
        for (std::size_t j = n; j >= 1; --j) {
            acc += row[j - 1];
            out[j - 1] = acc;
        }
        break;
    }
    case StructuredMatrix::Kind::shift:
        for (std::size_t j = 1; j < n; ++j) out[j - 1] = row[j];
        break;
    case StructuredMatrix::Kind::dense: {
        const TriMatrix& m = *right.matrix();
        for (std::size_t l = 1; l <= n; ++l) {
            const auto mrow = m.row(l);
            for (std::size_t j = 1; j <= l; ++j) out[j - 1].add_product(row[l - 1], mrow[j - 1]);
        }
        break;
    }
    }
    return out;
}

} // namespace mns
