#include "mns/relations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mns/matrix_algebra.hpp"
#include "mns/nested_sum.hpp"

namespace mns {

namespace {

Rational strict_sum(std::vector<Sequence> factors, std::size_t upper, std::size_t lower) {
    return evaluate_matrix({std::move(factors), upper, lower, Mode::strict});
}

void require_relation_bounds(std::size_t upper, std::size_t lower) {
    if (lower < 1 || upper <= lower) {
        throw std::invalid_argument("relation needs N > m >= 1 (got N=" + std::to_string(upper) +
                                    ", m=" + std::to_string(lower) + ")");
    }
}

std::vector<std::string> to_strings(const Sequence& f) {
    std::vector<std::string> out;
    for (const Rational& x : f.values()) out.push_back(x.str());
    return out;
}

Rational weak_power_sum(const Sequence& a, std::size_t copies, std::size_t upper) {
    return evaluate_matrix({std::vector<Sequence>(copies, a), upper, 1, Mode::weak});
}

} // namespace

IdentityReport verify_sa_two(const Sequence& f, const Sequence& g, std::size_t upper,
                             std::size_t lower) {
    require_relation_bounds(upper, lower);
    const Sequence fh = f.truncated(upper);
    const Sequence gh = g.truncated(upper);
    IdentityReport report{"sa-two", {{"N", upper}, {"m", lower}}, {}, {}};
    report.params["f"] = to_strings(fh);
    report.params["g"] = to_strings(gh);
    report.lhs = {evaluate_matrix({{fh, gh}, upper - 1, lower, Mode::weak})};
    report.rhs = {strict_sum({fh, gh}, upper, lower) +
                  strict_sum({pointwise_product(fh, gh)}, upper, lower)};
    return report;
}

IdentityReport verify_sa_three(const Sequence& f, const Sequence& g, const Sequence& h,
                               std::size_t upper, std::size_t lower) {
    require_relation_bounds(upper, lower);
    const Sequence fh = f.truncated(upper);
    const Sequence gh = g.truncated(upper);
    const Sequence hh = h.truncated(upper);
    const Sequence fg = pointwise_product(fh, gh);
    const Sequence gk = pointwise_product(gh, hh);
    IdentityReport report{"sa-three", {{"N", upper}, {"m", lower}}, {}, {}};
    report.params["f"] = to_strings(fh);
    report.params["g"] = to_strings(gh);
    report.params["h"] = to_strings(hh);
    report.lhs = {evaluate_matrix({{fh, gh, hh}, upper - 1, lower, Mode::weak})};
    report.rhs = {strict_sum({fh, gh, hh}, upper, lower) + strict_sum({fg, hh}, upper, lower) +
                  strict_sum({fh, gk}, upper, lower) +
                  strict_sum({pointwise_product(fg, hh)}, upper, lower)};
    return report;
}

GTable::GTable(Sequence a, std::size_t bound) : a_(std::move(a)), bound_(bound) {
    const std::size_t columns = a_.size();
    rows_.resize(bound_ + 1);
    rows_[0] = {Rational(1)};
    for (std::size_t n = 1; n <= bound_; ++n) {
        const std::size_t width = std::min(n, columns);
        auto& row = rows_[n];
        row.resize(width + 1);
        for (std::size_t k = 1; k <= width; ++k) {
            if (k == n) {
                row[k] = 1;
                continue;
            }
            row[k] = rows_[n - 1][k - 1];
            row[k].add_product(a_(k), rows_[n - 1][k]);
        }
    }
}

const Rational& GTable::operator()(std::size_t n, std::size_t k) const {
    static const Rational one(1);
    if (n > bound_ || k > n) {
        throw std::out_of_range("G(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") outside 0 <= k <= n <= " + std::to_string(bound_));
    }
    if (k == n) return one;
    if (k >= rows_[n].size()) {
        throw std::out_of_range("G(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") needs a_" + std::to_string(k) + " but the sequence has " +
                                std::to_string(a_.size()) + " values");
    }
    return rows_[n][k];
}

Rational butler_karasik_G(const Sequence& a, std::size_t n, std::size_t k) {
    if (k > n) throw std::out_of_range("G(n, k) needs k <= n");
    return GTable(a, n)(n, k);
}

IdentityReport verify_butler_karasik(const Sequence& a, std::size_t upper, std::size_t k) {
    if (upper < 1 || k < 1) throw std::invalid_argument("Butler-Karasik needs N >= 1 and k >= 1");
    const Sequence head = a.truncated(upper);
    IdentityReport report{"butler-karasik", {{"N", upper}, {"k", k}}, {}, {}};
    report.params["a"] = to_strings(head);
    report.lhs = {weak_power_sum(head, k, upper)};
    report.rhs = {butler_karasik_G(head, upper + k, upper)};
    return report;
}

Rational symmetric_expansion(const Sequence& a, long k) {
    if (!all_nonzero(a)) throw std::domain_error("symmetric expansion requires nonzero entries");
    if (!all_distinct(a)) throw DuplicateEigenvalueError("duplicate entries: " + to_string(a));
    Rational total;
    for (std::size_t j = 1; j <= a.size(); ++j) {
        const Rational inv_aj = a(j).reciprocal();
        Rational weight(1);
        for (std::size_t m = 1; m <= a.size(); ++m) {
            if (m != j) weight *= Rational(1) - a(m) * inv_aj;
        }
        total += a(j).pow(k) / weight;
    }
    return total;
}

IdentityReport verify_symmetric_expansion(const Sequence& a, std::size_t k) {
    IdentityReport report{"symmetric", {{"N", a.size()}, {"k", k}}, {}, {}};
    report.params["a"] = to_strings(a);
    report.lhs = {weak_power_sum(a, k, a.size())};
    report.rhs = {symmetric_expansion(a, static_cast<long>(k))};
    return report;
}

Rational binomial(std::size_t n, std::size_t l) {
    if (l > n) return Rational();
    Rational out(1);
    for (std::size_t t = 1; t <= l; ++t) {
        out *= Rational(static_cast<long>(n - t + 1));
        out /= Rational(static_cast<long>(t));
    }
    return out;
}

Rational dilcher_rhs(std::size_t n, std::size_t k) {
    if (n < 1) throw std::invalid_argument("Dilcher sum needs N >= 1");
    Rational total;
    Rational choose(1);
    for (std::size_t l = 1; l <= n; ++l) {
        choose *= Rational(static_cast<long>(n - l + 1));
        choose /= Rational(static_cast<long>(l));
        Rational term = choose * Rational(static_cast<long>(l)).pow(-static_cast<long>(k));
        total += l % 2 == 1 ? term : -term;
    }
    return total;
}

IdentityReport verify_dilcher(std::size_t n, std::size_t k) {
    IdentityReport report{"dilcher", {{"N", n}, {"k", k}}, {}, {}};
    const std::vector<long> ones(k, 1);
    report.lhs = {harmonic_S(ones, n)};
    report.rhs = {dilcher_rhs(n, k)};
    return report;
}

Rational general_dilcher_rhs(long a, std::size_t n, std::size_t k) {
    if (a < 1) throw std::invalid_argument("generalized Dilcher sum needs a >= 1");
    if (n < 1) throw std::invalid_argument("generalized Dilcher sum needs N >= 1");
    std::vector<Rational> powers;
    powers.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) powers.push_back(Rational(static_cast<long>(t)).pow(a));
    Rational total;
    for (std::size_t l = 1; l <= n; ++l) {
        Rational weight(1);
        for (std::size_t t = 1; t <= n; ++t) {
            if (t != l) weight *= powers[t - 1] / (powers[t - 1] - powers[l - 1]);
        }
        total += weight / powers[l - 1].pow(static_cast<long>(k));
    }
    return total;
}

IdentityReport verify_general_dilcher(long a, std::size_t n, std::size_t k) {
    IdentityReport report{"general-dilcher", {{"a", a}, {"N", n}, {"k", k}}, {}, {}};
    const std::vector<long> indices(k, a);
    report.lhs = {harmonic_S(indices, n)};
    report.rhs = {general_dilcher_rhs(a, n, k)};
    return report;
}

} // namespace mns
