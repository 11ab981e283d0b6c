#include "mns/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace mns {

namespace {

std::string_view trim(std::string_view text) {
    const auto blank = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && blank(text.front())) text.remove_prefix(1);
    while (!text.empty() && blank(text.back())) text.remove_suffix(1);
    return text;
}

mpz_class parse_integer(std::string_view digits, bool allow_sign, std::string_view whole) {
    std::string_view body = digits;
    bool negative = false;
    if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty() || !std::all_of(body.begin(), body.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
    }
    mpz_class value(std::string(body), 10);
    return negative ? mpz_class(-value) : value;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, 1);
    value_ /= den;
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view body = trim(text);
    const auto slash = body.find('/');
    mpq_class value;
    if (slash == std::string_view::npos) {
        value = mpq_class(parse_integer(body, true, text));
    } else {
        mpz_class num = parse_integer(body.substr(0, slash), true, text);
        mpz_class den = parse_integer(body.substr(slash + 1), false, text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
        }
        value = mpq_class(num, den);
        value.canonicalize();
    }
    return Rational(std::move(value));
}

std::string Rational::str() const {
    return value_.get_str(10);
}

bool Rational::is_integer() const {
    return value_.get_den() == 1;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    Rational out;
    mpq_inv(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    Rational out;
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // A power of a canonical fraction is canonical.
    out.value_ = mpq_class(num, den);
    return out;
}

Rational& Rational::add_product(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return *this;
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
    return *this;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    mpq_neg(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

} // namespace mns
