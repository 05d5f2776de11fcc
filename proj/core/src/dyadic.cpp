#include "bwkit/dyadic.hpp"

#include "bwkit/error.hpp"

namespace bwkit {

namespace {

// Compares q * 2^level against the integer k: returns sign(q*2^level - k).
int compare_scaled(const Rational& q, unsigned level, std::uint64_t k) {
    BigInt lhs = q.numerator();
    lhs <<= level;
    BigInt rhs = q.denominator();
    rhs *= BigInt(static_cast<unsigned long>(k));
    return cmp(lhs, rhs);
}

}  // namespace

DyadicInterval::DyadicInterval(unsigned level, std::uint64_t index) : level_(level), index_(index) {
    if (level_ > max_level) throw Error(Errc::invariant_violation, "dyadic level above 62");
}

DyadicInterval DyadicInterval::from_path(const BitString& path) {
    std::uint64_t index = 0;
    for (auto b : path.bits()) index = (index << 1) | b;
    return DyadicInterval(static_cast<unsigned>(path.size()), index);
}

Rational DyadicInterval::left() const {
    return Rational(BigInt(static_cast<unsigned long>(index_)), pow_big(2, level_));
}

Rational DyadicInterval::right() const {
    return Rational(BigInt(static_cast<unsigned long>(index_)) + 1, pow_big(2, level_));
}

Rational DyadicInterval::width() const { return Rational::pow2(-static_cast<long>(level_)); }

bool DyadicInterval::contains(const Rational& q) const {
    return compare_scaled(q, level_, index_) >= 0 && compare_scaled(q, level_, index_ + 1) <= 0;
}

bool DyadicInterval::contains_halfopen(const Rational& q) const {
    return compare_scaled(q, level_, index_) >= 0 && compare_scaled(q, level_, index_ + 1) < 0;
}

DyadicInterval DyadicInterval::child(std::uint8_t bit) const {
    return DyadicInterval(level_ + 1, (index_ << 1) | (bit & 1U));
}

DyadicInterval dyadic_interval(unsigned level, std::uint64_t index) { return DyadicInterval(level, index); }

}  // namespace bwkit
