#pragma once

#include <cstddef>
#include <vector>

#include "mns/identity_report.hpp"
#include "mns/rational.hpp"
#include "mns/sequence.hpp"

namespace mns {

/// S(f,g; N-1, m) = A(f,g; N, m) + A(fg; N, m), for N > m >= 1.
IdentityReport verify_sa_two(const Sequence& f, const Sequence& g, std::size_t upper,
                             std::size_t lower);

/// S(f,g,h; N-1, m) = A(f,g,h; N,m) + A(fg,h; N,m) + A(f,gh; N,m) + A(fgh; N,m).
IdentityReport verify_sa_three(const Sequence& f, const Sequence& g, const Sequence& h,
                               std::size_t upper, std::size_t lower);

/// Memoized G(n, k) for 0 <= k <= n <= bound:
///   G(0,0) = 1, G(n,0) = 0 for n >= 1, G(n,n) = 1,
///   G(n,k) = G(n-1,k-1) + a_k G(n-1,k) for 1 <= k < n.
class GTable {
public:
    /// Needs a_1..a_min(bound-1, len(a)); throws std::invalid_argument when a
    /// required a_k is missing.
    GTable(Sequence a, std::size_t bound);

    std::size_t bound() const { return bound_; }
    const Sequence& sequence() const { return a_; }

    /// Throws std::out_of_range unless 0 <= k <= n <= bound.
    const Rational& operator()(std::size_t n, std::size_t k) const;

private:
    Sequence a_;
    std::size_t bound_;
    std::vector<std::vector<Rational>> rows_;
};

Rational butler_karasik_G(const Sequence& a, std::size_t n, std::size_t k);

/// S(a,...,a [k copies]; N, 1) = G(N + k, N).
IdentityReport verify_butler_karasik(const Sequence& a, std::size_t upper, std::size_t k);

/// sum_j a_j^k prod_{m != j} 1/(1 - a_m/a_j) over the whole sequence.
/// Requires distinct nonzero entries (DuplicateEigenvalueError / std::domain_error).
Rational symmetric_expansion(const Sequence& a, long k);
IdentityReport verify_symmetric_expansion(const Sequence& a, std::size_t k);

/// sum_{l=1}^{N} C(N,l) (-1)^{l-1} / l^k.
Rational dilcher_rhs(std::size_t n, std::size_t k);
IdentityReport verify_dilcher(std::size_t n, std::size_t k);

/// sum_{l=1}^{N} (prod_{n != l} n^a / (n^a - l^a)) / l^{a k}.
Rational general_dilcher_rhs(long a, std::size_t n, std::size_t k);
IdentityReport verify_general_dilcher(long a, std::size_t n, std::size_t k);

/// Binomial coefficient by the multiplicative recurrence C(n,l) = C(n,l-1)(n-l+1)/l.
Rational binomial(std::size_t n, std::size_t l);

} // namespace mns
