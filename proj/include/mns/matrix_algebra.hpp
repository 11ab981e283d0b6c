#pragma once

#include <cstddef>
#include <stdexcept>

#include "mns/identity_report.hpp"
#include "mns/sequence.hpp"
#include "mns/tri_matrix.hpp"

namespace mns {

/// Raised when an eigendecomposition or partial-fraction sum meets repeated
/// values; the closed forms divide by a_t - a_k.
class DuplicateEigenvalueError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Bidiagonal inverse of S_a: (i, i) = 1/a_i and (i, i-1) = -1/a_{i-1}.
/// Throws std::domain_error if any a_i is zero.
TriMatrix inverse_S(const Sequence& a);

/// S_a^{-1} S_{ab} S_b^{-1}, the left side of the two-factor identity.
TriMatrix two_factor_lhs(const Sequence& a, const Sequence& b);
/// I - Delta.
TriMatrix two_factor_rhs(std::size_t dim);

/// S_a D S_b D S_c + S_ab D S_c + S_a D S_bc + S_abc  (D = shift).
TriMatrix three_factor_lhs(const Sequence& a, const Sequence& b, const Sequence& c);
/// S_a S_b S_c.
TriMatrix three_factor_rhs(const Sequence& a, const Sequence& b, const Sequence& c);

/// S_a^{-1} S_ab S_b^{-1} == I - Delta, computed exactly.
bool check_two_factor_identity(const Sequence& a, const Sequence& b);

/// S_a D S_b D S_c + S_ab D S_c + S_a D S_bc + S_abc == S_a S_b S_c.
bool check_three_factor_identity(const Sequence& a, const Sequence& b, const Sequence& c);

/// S_a = D diag(a) E with closed-form triangular D and E = D^{-1}.
struct EigenDecomposition {
    TriMatrix vectors;          ///< D: column j is the eigenvector for a_j.
    Sequence eigenvalues;       ///< a_1..a_N.
    TriMatrix inverse_vectors;  ///< E.

    /// D diag(a^k) E.
    TriMatrix power(long k) const;
    TriMatrix reconstruct() const { return power(1); }
};

/// d_{i,j} = (a_i/a_N) prod_{k=i+1}^{N} (1 - a_k/a_j),
/// e_{i,j} = (a_N/a_i) prod_{k=j..N, k != i} 1 / (1 - a_k/a_i), for i >= j.
/// Throws std::domain_error for zero entries and DuplicateEigenvalueError
/// for repeated entries.
EigenDecomposition eigendecompose(const Sequence& a);

/// (S_a)^k through the eigendecomposition.
TriMatrix power_via_diag(const Sequence& a, long k);

/// sum_{t=j}^{i} prod_{k=j..i, k != t} 1/(a_t - a_k), expected delta_{ij}.
/// Requires 1 <= j <= i <= N and distinct a_j..a_i.
Rational partial_fraction_sum(const Sequence& a, std::size_t i, std::size_t j);
bool check_partial_fraction(const Sequence& a, std::size_t i, std::size_t j);

/// Reports with both sides flattened row by row (packed lower triangle).
IdentityReport verify_two_factor(const Sequence& a, const Sequence& b);
IdentityReport verify_three_factor(const Sequence& a, const Sequence& b, const Sequence& c);
/// Every window 1 <= j <= i <= N at once; the right side is delta_ij.
IdentityReport verify_partial_fraction(const Sequence& a);
/// D E, D diag(a) E and D diag(a^k) E against I, S_a and (S_a)^k by repeated
/// multiplication, concatenated.
IdentityReport verify_eigen(const Sequence& a, long k);

} // namespace mns
