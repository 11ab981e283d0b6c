#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mns {

/// Exact rational number backed by GMP.
///
/// Values are kept in canonical form: the denominator is positive and
/// coprime to the numerator, so two rationals are equal iff their
/// numerators and denominators are equal.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    /// Throws std::domain_error when `den` is zero.
    Rational(long num, long den);

    explicit Rational(mpq_class value);

    /// Parses "p/q" or "p" (optional leading sign, surrounding blanks
    /// ignored). Throws std::invalid_argument on malformed text or a
    /// zero denominator.
    static Rational parse(std::string_view text);

    /// Canonical text "p/q", with "/q" omitted when q = 1.
    std::string str() const;

    double to_double() const { return value_.get_d(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    /// Throws std::domain_error for zero.
    Rational reciprocal() const;

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long exponent) const;

    const mpq_class& raw() const { return value_; }

    /// *this += a * b without constructing an intermediate Rational.
    Rational& add_product(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    Rational operator-() const;

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace mns
