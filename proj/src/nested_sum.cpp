#include "mns/nested_sum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "mns/index_matrix.hpp"

namespace mns {

namespace {

StructuredMatrix index_matrix(const Sequence& f, Mode mode, std::size_t n) {
    Sequence head = f.truncated(n);
    return mode == Mode::weak ? build_S(head) : build_A(head);
}

void require_factor_lengths(std::span<const Sequence> factors, std::size_t n) {
    for (std::size_t l = 0; l < factors.size(); ++l) {
        if (factors[l].size() < n) {
            throw std::invalid_argument("factor " + std::to_string(l + 1) + " has " +
                                        std::to_string(factors[l].size()) +
                                        " values, need at least " + std::to_string(n));
        }
    }
}

std::vector<Sequence> harmonic_factors(std::span<const long> indices, std::size_t n) {
    std::vector<Sequence> factors;
    factors.reserve(indices.size());
    for (long i : indices) factors.push_back(harmonic_sequence(i, n));
    return factors;
}

} // namespace

const char* to_string(Mode mode) {
    return mode == Mode::weak ? "weak" : "strict";
}

Mode parse_mode(std::string_view text) {
    if (text == "weak" || text == "S") return Mode::weak;
    if (text == "strict" || text == "A") return Mode::strict;
    throw std::invalid_argument("unknown mode \"" + std::string(text) + "\" (use weak or strict)");
}

void SumSpec::validate() const {
    if (lower < 1 || lower > upper) {
        throw std::invalid_argument("bounds must satisfy 1 <= m <= N (got N=" +
                                    std::to_string(upper) + ", m=" + std::to_string(lower) + ")");
    }
    require_factor_lengths(factors, upper);
}

Rational evaluate_matrix(const SumSpec& spec) {
    spec.validate();
    const std::size_t n = spec.upper;
    // Row n of P.
    std::vector<Rational> row(n, Rational(1));
    for (const Sequence& f : spec.factors) row = row_times(row, index_matrix(f, spec.mode, n));
    return row[spec.lower - 1];
}

SumTable evaluate_table(std::span<const Sequence> factors, Mode mode, std::size_t n) {
    if (n < 1) throw std::invalid_argument("table dimension must be at least 1");
    require_factor_lengths(factors, n);
    // Integer numerators over one common denominator; each factor scales it
    // by Q = lcm of the factor's denominators, and entries are reduced once
    // at the end. Same recurrence as multiply(TriMatrix, StructuredMatrix).
    std::vector<mpz_class> num(TriMatrix::packed_size(n), 1);
    mpz_class den = 1;
    for (const Sequence& f : factors) {
        mpz_class q = 1;
        for (std::size_t l = 1; l <= n; ++l)
            mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), f(l).denominator().get_mpz_t());
        std::vector<mpz_class> c(n);
        for (std::size_t l = 1; l <= n; ++l) {
            mpz_divexact(c[l - 1].get_mpz_t(), q.get_mpz_t(), f(l).denominator().get_mpz_t());
            c[l - 1] *= f(l).numerator();
        }
        mpz_class acc, old;
        for (std::size_t i = 1; i <= n; ++i) {
            mpz_class* row = num.data() + TriMatrix::offset(i);
            acc = 0;
            for (std::size_t j = i; j >= 1; --j) {
                if (mode == Mode::weak) {
                    mpz_addmul(acc.get_mpz_t(), row[j - 1].get_mpz_t(), c[j - 1].get_mpz_t());
                    row[j - 1] = acc;
                } else {
                    // (L A_f)(i,j) = sum_{l=j+1}^{i} L(i,l) f(l-1)
                    old.swap(row[j - 1]);
                    row[j - 1] = acc;
                    if (j >= 2) mpz_addmul(acc.get_mpz_t(), old.get_mpz_t(), c[j - 2].get_mpz_t());
                }
            }
        }
        den *= q;
    }
    std::vector<Rational> packed;
    packed.reserve(num.size());
    for (mpz_class& x : num) packed.emplace_back(mpq_class(std::move(x), den));
    return {TriMatrix::from_packed(n, std::move(packed)), mode};
}

Rational evaluate_bruteforce(const SumSpec& spec, std::uint64_t max_tuples) {
    spec.validate();
    const std::uint64_t width = spec.upper - spec.lower + 1;
    std::uint64_t box = 1;
    for (std::size_t l = 0; l < spec.factors.size(); ++l) {
        if (box > max_tuples / width) {
            throw ExplosionGuardError("brute force over " + std::to_string(width) + "^" +
                                      std::to_string(spec.factors.size()) +
                                      " index tuples exceeds the guard of " +
                                      std::to_string(max_tuples));
        }
        box *= width;
    }

    const std::size_t k = spec.factors.size();
    const std::size_t shrink = spec.mode == Mode::strict ? 1 : 0;
    Rational total;
    // descend(l, top, partial): choose n_l in [lower, top] for factor l.
    std::function<void(std::size_t, std::size_t, const Rational&)> descend =
        [&](std::size_t l, std::size_t top, const Rational& partial) {
            if (l == k) {
                total += partial;
                return;
            }
            for (std::size_t n = spec.lower; n <= top; ++n) {
                const Rational& value = spec.factors[l](n);
                if (value.is_zero()) continue;
                descend(l + 1, n - shrink, partial * value);
            }
        };
    if (k == 0) return Rational(1);
    if (spec.upper < spec.lower + shrink) return Rational();
    descend(0, spec.upper - shrink, Rational(1));
    return total;
}

Rational harmonic_S(std::span<const long> indices, std::size_t n) {
    return evaluate_matrix({harmonic_factors(indices, n), n, 1, Mode::weak});
}

Rational harmonic_H(std::span<const long> indices, std::size_t n) {
    return evaluate_matrix({harmonic_factors(indices, n), n, 1, Mode::strict});
}

std::vector<ConvergencePoint> converge_stream(std::span<const int> exponents, std::size_t n_max,
                                              std::span<const std::size_t> checkpoints) {
    if (exponents.empty()) throw std::invalid_argument("at least one exponent is required");
    if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 1; })) {
        throw std::invalid_argument("exponents must be positive integers");
    }
    if (exponents.front() == 1) {
        throw std::invalid_argument(
            "leading exponent 1 gives a divergent series; the outermost factor needs exponent >= 2");
    }
    if (n_max < 1) throw std::invalid_argument("N must be at least 1");

    std::vector<std::size_t> report(checkpoints.begin(), checkpoints.end());
    std::sort(report.begin(), report.end());
    report.erase(std::unique(report.begin(), report.end()), report.end());

    const std::size_t k = exponents.size();
    // inner[l] = sum over n_l <= n of f_l(n_l) * inner[l+1](n_l); inner[k] = 1.
    std::vector<double> inner(k + 1, 0.0);
    inner[k] = 1.0;
    std::vector<ConvergencePoint> out;
    auto next = report.begin();
    while (next != report.end() && *next < 1) ++next;
    for (std::size_t n = 1; n <= n_max && next != report.end(); ++n) {
        const double x = static_cast<double>(n);
        for (std::size_t l = k; l-- > 0;) inner[l] += std::pow(x, -exponents[l]) * inner[l + 1];
        if (n == *next) {
            out.push_back({n, inner[0]});
            ++next;
        }
    }
    return out;
}

std::vector<std::size_t> geometric_checkpoints(std::size_t start, std::size_t n_max) {
    std::vector<std::size_t> points;
    for (std::size_t n = std::max<std::size_t>(start, 1); n < n_max; n *= 2) points.push_back(n);
    points.push_back(n_max);
    return points;
}

std::string to_csv(std::span<const ConvergencePoint> points) {
    std::string out = "N,value\n";
    char buffer[64];
    for (const auto& p : points) {
        std::snprintf(buffer, sizeof buffer, "%zu,%.15g\n", p.n, p.value);
        out += buffer;
    }
    return out;
}

} // namespace mns
