#include "mns/matrix_algebra.hpp"

#include <string>
#include <vector>

#include "mns/index_matrix.hpp"

namespace mns {

namespace {

void require_nonzero(const Sequence& a, const char* what) {
    if (!all_nonzero(a)) throw std::domain_error(std::string(what) + " requires nonzero entries");
}

std::vector<std::string> to_strings(const Sequence& f) {
    std::vector<std::string> out;
    for (const Rational& x : f.values()) out.push_back(x.str());
    return out;
}

void append(std::vector<Rational>& out, const TriMatrix& m) {
    out.insert(out.end(), m.packed().begin(), m.packed().end());
}

void require_same_length(const Sequence& a, const Sequence& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sequence length mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

} // namespace

TriMatrix inverse_S(const Sequence& a) {
    require_nonzero(a, "inverse of S_a");
    const std::size_t n = a.size();
    std::vector<Rational> inv(n);
    for (std::size_t i = 1; i <= n; ++i) inv[i - 1] = a(i).reciprocal();
    return TriMatrix(n, [&](std::size_t i, std::size_t j) {
        if (i == j) return inv[i - 1];
        if (i == j + 1) return -inv[j - 1];
        return Rational();
    });
}

TriMatrix two_factor_lhs(const Sequence& a, const Sequence& b) {
    require_same_length(a, b);
    require_nonzero(a, "two-factor identity");
    require_nonzero(b, "two-factor identity");
    const TriMatrix left = multiply(inverse_S(a), build_S(pointwise_product(a, b)));
    return multiply(left, inverse_S(b));
}

TriMatrix two_factor_rhs(std::size_t dim) {
    return TriMatrix::identity(dim) - build_shift(dim).materialize();
}

TriMatrix three_factor_lhs(const Sequence& a, const Sequence& b, const Sequence& c) {
    require_same_length(a, b);
    require_same_length(b, c);
    const std::size_t n = a.size();
    const StructuredMatrix shift = build_shift(n);
    const Sequence ab = pointwise_product(a, b);
    const Sequence bc = pointwise_product(b, c);
    const Sequence abc = pointwise_product(ab, c);

    TriMatrix chain = build_S(a).materialize();
    for (const StructuredMatrix& m : {shift, build_S(b), shift, build_S(c)}) {
        chain = multiply(chain, m);
    }
    const TriMatrix ab_c = multiply(multiply(build_S(ab).materialize(), shift), build_S(c));
    const TriMatrix a_bc = multiply(multiply(build_S(a).materialize(), shift), build_S(bc));
    return chain + ab_c + a_bc + build_S(abc).materialize();
}

TriMatrix three_factor_rhs(const Sequence& a, const Sequence& b, const Sequence& c) {
    require_same_length(a, b);
    require_same_length(b, c);
    return multiply(multiply(build_S(a).materialize(), build_S(b)), build_S(c));
}

bool check_two_factor_identity(const Sequence& a, const Sequence& b) {
    return two_factor_lhs(a, b) == two_factor_rhs(a.size());
}

bool check_three_factor_identity(const Sequence& a, const Sequence& b, const Sequence& c) {
    return three_factor_lhs(a, b, c) == three_factor_rhs(a, b, c);
}

TriMatrix EigenDecomposition::power(long k) const {
    std::vector<Rational> powers;
    powers.reserve(eigenvalues.size());
    for (const Rational& lambda : eigenvalues.values()) powers.push_back(lambda.pow(k));
    return multiply(scale_columns(vectors, Sequence(std::move(powers))), inverse_vectors);
}

EigenDecomposition eigendecompose(const Sequence& a) {
    require_nonzero(a, "eigendecomposition");
    if (!all_distinct(a)) {
        throw DuplicateEigenvalueError("duplicate eigenvalues: " + to_string(a));
    }
    const std::size_t n = a.size();

    // Column j of D: running product over k = i+1..N, built from the bottom row up.
    std::vector<Rational> d(TriMatrix::packed_size(n));
    for (std::size_t j = 1; j <= n; ++j) {
        const Rational inv_aj = a(j).reciprocal();
        Rational tail(1);
        for (std::size_t i = n; i >= j; --i) {
            d[TriMatrix::offset(i) + j - 1] = a(i) / a(n) * tail;
            tail *= Rational(1) - a(i) * inv_aj;
        }
    }

    // Row i of E: the factor over k = i+1..N is shared by every column, the
    // factor over k = j..i-1 grows as j moves left.
    std::vector<Rational> e(TriMatrix::packed_size(n));
    for (std::size_t i = 1; i <= n; ++i) {
        const Rational inv_ai = a(i).reciprocal();
        Rational upper(1);
        for (std::size_t k = i + 1; k <= n; ++k) upper *= Rational(1) - a(k) * inv_ai;
        Rational lower(1);
        const Rational scale = a(n) * inv_ai;
        for (std::size_t j = i; j >= 1; --j) {
            if (j < i) lower *= Rational(1) - a(j) * inv_ai;
            e[TriMatrix::offset(i) + j - 1] = scale / (upper * lower);
        }
    }

    return {TriMatrix::from_packed(n, std::move(d)), a, TriMatrix::from_packed(n, std::move(e))};
}

TriMatrix power_via_diag(const Sequence& a, long k) {
    return eigendecompose(a).power(k);
}

Rational partial_fraction_sum(const Sequence& a, std::size_t i, std::size_t j) {
    if (j < 1 || j > i || i > a.size()) {
        throw std::out_of_range("partial fraction bounds need 1 <= j <= i <= " +
                                std::to_string(a.size()));
    }
    const Sequence window = Sequence({a.values().begin() + static_cast<std::ptrdiff_t>(j - 1),
                                      a.values().begin() + static_cast<std::ptrdiff_t>(i)});
    if (!all_distinct(window)) {
        throw DuplicateEigenvalueError("partial fraction sum needs distinct a_" +
                                       std::to_string(j) + "..a_" + std::to_string(i));
    }
    Rational total;
    for (std::size_t t = j; t <= i; ++t) {
        Rational denominator(1);
        for (std::size_t k = j; k <= i; ++k) {
            if (k != t) denominator *= a(t) - a(k);
        }
        total += denominator.reciprocal();
    }
    return total;
}

bool check_partial_fraction(const Sequence& a, std::size_t i, std::size_t j) {
    return partial_fraction_sum(a, i, j) == Rational(i == j ? 1 : 0);
}

IdentityReport verify_two_factor(const Sequence& a, const Sequence& b) {
    IdentityReport report{"two-factor", {{"N", a.size()}}, {}, {}};
    report.params["a"] = to_strings(a);
    report.params["b"] = to_strings(b);
    append(report.lhs, two_factor_lhs(a, b));
    append(report.rhs, two_factor_rhs(a.size()));
    return report;
}

IdentityReport verify_three_factor(const Sequence& a, const Sequence& b, const Sequence& c) {
    IdentityReport report{"three-factor", {{"N", a.size()}}, {}, {}};
    report.params["a"] = to_strings(a);
    report.params["b"] = to_strings(b);
    report.params["c"] = to_strings(c);
    append(report.lhs, three_factor_lhs(a, b, c));
    append(report.rhs, three_factor_rhs(a, b, c));
    return report;
}

IdentityReport verify_partial_fraction(const Sequence& a) {
    IdentityReport report{"partial-fraction", {{"N", a.size()}}, {}, {}};
    report.params["a"] = to_strings(a);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
            report.lhs.push_back(partial_fraction_sum(a, i, j));
            report.rhs.push_back(Rational(i == j ? 1 : 0));
        }
    }
    return report;
}

IdentityReport verify_eigen(const Sequence& a, long k) {
    if (k < 0) throw std::invalid_argument("eigen power must be nonnegative");
    IdentityReport report{"eigen", {{"N", a.size()}, {"k", k}}, {}, {}};
    report.params["a"] = to_strings(a);
    const EigenDecomposition eig = eigendecompose(a);
    const StructuredMatrix s = build_S(a);
    append(report.lhs, multiply(eig.vectors, eig.inverse_vectors));
    append(report.lhs, eig.reconstruct());
    append(report.lhs, eig.power(k));
    append(report.rhs, TriMatrix::identity(a.size()));
    append(report.rhs, s.materialize());
    TriMatrix power = TriMatrix::identity(a.size());
    for (long p = 0; p < k; ++p) power = multiply(power, s);
    append(report.rhs, power);
    return report;
}

} // namespace mns
