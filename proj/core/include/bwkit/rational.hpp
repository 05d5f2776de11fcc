#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bwkit {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Serialized as "p/q" (the denominator is always written).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Accepts "p/q" or "p"; throws Error(schema_violation) otherwise.
    static Rational parse(std::string_view text);

    /// 2^e and 3^e for any signed exponent.
    static Rational pow2(long exponent);
    static Rational pow3(long exponent);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    int sign() const { return sgn(value_); }
    Rational abs() const;
    BigInt floor() const;
    /// True when the value lies in the closed unit interval.
    bool in_unit_interval() const;

    std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class value);
    mpq_class value_;
};

/// |a - b|
Rational distance(const Rational& a, const Rational& b);

BigInt pow_big(unsigned long base, unsigned long exponent);

}  // namespace bwkit
