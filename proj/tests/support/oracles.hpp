#pragma once

// Test-only reference computations. They use plain square matrices of
// mpq_class and full-box enumeration, sharing no code with the library's
// structured kernels or nested-descent brute force.

#include <cstddef>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "mns/rational.hpp"
#include "mns/sequence.hpp"
#include "mns/tri_matrix.hpp"

namespace oracle {

using Q = mpq_class;
using Square = std::vector<std::vector<Q>>;

inline Q q(const mns::Rational& x) { return x.raw(); }

inline Square zeros(std::size_t n) { return Square(n, std::vector<Q>(n, Q(0))); }

inline Square identity(std::size_t n) {
    Square m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Square mul(const Square& a, const Square& b) {
    const std::size_t n = a.size();
    Square c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

inline Square add(const Square& a, const Square& b) {
    Square c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
    return c;
}

// S_f as written out entry by entry: row i holds f(i) in columns 1..i.
inline Square index_s(const mns::Sequence& f) {
    const std::size_t n = f.size();
    Square m = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m[i][j] = q(f(i + 1));
    return m;
}

// A_f: zero first row, row i holds f(i-1) in columns 1..i-1.
inline Square index_a(const mns::Sequence& f) {
    const std::size_t n = f.size();
    Square m = zeros(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) m[i][j] = q(f(i));
    return m;
}

inline Square shift(std::size_t n) {
    Square m = zeros(n);
    for (std::size_t i = 1; i < n; ++i) m[i][i - 1] = 1;
    return m;
}

inline Square prefix(std::size_t n) {
    Square m = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m[i][j] = 1;
    return m;
}

inline Square from_tri(const mns::TriMatrix& t) {
    Square m = zeros(t.dim());
    for (std::size_t i = 1; i <= t.dim(); ++i)
        for (std::size_t j = 1; j <= i; ++j) m[i - 1][j - 1] = q(t(i, j));
    return m;
}

inline bool same(const mns::TriMatrix& t, const Square& s) {
    if (t.dim() != s.size()) return false;
    for (std::size_t i = 1; i <= t.dim(); ++i)
        for (std::size_t j = 1; j <= t.dim(); ++j)
            if (q(t(i, j)) != s[i - 1][j - 1]) return false;
    return true;
}

// Enumerates the full box [lower, upper]^k and keeps chains satisfying the
// ordering, exactly as the nested sum is written.
inline Q box_sum(const std::vector<mns::Sequence>& factors, std::size_t upper, std::size_t lower,
                 bool strict) {
    const std::size_t k = factors.size();
    if (k == 0) return Q(1);
    std::vector<std::size_t> idx(k, lower);
    Q total = 0;
    while (true) {
        bool ok = strict ? idx[0] < upper : idx[0] <= upper;
        for (std::size_t l = 1; l < k && ok; ++l)
            ok = strict ? idx[l - 1] > idx[l] : idx[l - 1] >= idx[l];
        if (ok) {
            Q term = 1;
            for (std::size_t l = 0; l < k; ++l) term *= q(factors[l](idx[l]));
            total += term;
        }
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] > upper) idx[pos++] = lower;
        if (pos == k) break;
    }
    return total;
}

}  // namespace oracle
