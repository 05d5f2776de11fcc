#include "bwkit/rational.hpp"

#include <cctype>

#include "bwkit/error.hpp"

namespace bwkit {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    std::string text{s};
    if (!text.empty() && text[0] == '+') text.erase(0, 1);
    return BigInt{text, 10};
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw Error(Errc::invariant_violation, "zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_text(text)) {
            throw Error(Errc::schema_violation, "not a rational: '" + std::string(text) + "'");
        }
        return Rational(parse_integer(text), BigInt(1));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) {
        throw Error(Errc::schema_violation, "not a rational: '" + std::string(text) + "'");
    }
    BigInt d = parse_integer(den);
    if (d == 0) throw Error(Errc::schema_violation, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

BigInt pow_big(unsigned long base, unsigned long exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

Rational Rational::pow2(long exponent) {
    if (exponent >= 0) return Rational(pow_big(2, static_cast<unsigned long>(exponent)), BigInt(1));
    return Rational(BigInt(1), pow_big(2, static_cast<unsigned long>(-exponent)));
}

Rational Rational::pow3(long exponent) {
    if (exponent >= 0) return Rational(pow_big(3, static_cast<unsigned long>(exponent)), BigInt(1));
    return Rational(BigInt(1), pow_big(3, static_cast<unsigned long>(-exponent)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

BigInt Rational::floor() const {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return out;
}

bool Rational::in_unit_interval() const { return sgn(value_) >= 0 && value_ <= 1; }

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
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
    if (sgn(rhs.value_) == 0) throw Error(Errc::invariant_violation, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational distance(const Rational& a, const Rational& b) { return (a - b).abs(); }

}  // namespace bwkit
