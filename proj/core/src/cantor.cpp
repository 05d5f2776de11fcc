#include "bwkit/cantor.hpp"

#include <numeric>

#include "bwkit/error.hpp"

namespace bwkit {

CantorPoint::CantorPoint() : period_(BitString::repeat(0, 1)) {}

CantorPoint CantorPoint::periodic(BitString prefix, BitString period) {
    if (period.empty()) throw Error(Errc::invariant_violation, "eventually periodic point needs a nonempty period");
    CantorPoint p;
    p.prefix_ = std::move(prefix);
    p.period_ = std::move(period);
    return p;
}

CantorPoint CantorPoint::constant(std::uint8_t bit) { return periodic({}, BitString::repeat(bit, 1)); }

CantorPoint CantorPoint::from_rule(Rule rule) {
    CantorPoint p;
    p.period_ = {};
    p.rule_ = std::make_shared<const Rule>(std::move(rule));
    return p;
}

CantorPoint CantorPoint::parse(std::string_view text) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close != text.size() - 1 ||
        close < open) {
        throw Error(Errc::schema_violation, "Cantor point must look like 'prefix,(period)': '" + std::string(text) + "'");
    }
    std::string_view head = text.substr(0, open);
    if (!head.empty()) {
        if (head.back() != ',') {
            throw Error(Errc::schema_violation, "missing ',' before period in '" + std::string(text) + "'");
        }
        head.remove_suffix(1);
    }
    const auto body = text.substr(open + 1, close - open - 1);
    if (body.empty()) throw Error(Errc::schema_violation, "empty period in '" + std::string(text) + "'");
    return periodic(BitString::parse(head), BitString::parse(body));
}

std::uint8_t CantorPoint::bit(std::uint64_t n) const {
    if (rule_) return (*rule_)(n) ? 1 : 0;
    if (n < prefix_.size()) return prefix_[n];
    return period_[(n - prefix_.size()) % period_.size()];
}

BitString CantorPoint::take(std::size_t length) const {
    std::vector<std::uint8_t> bits(length);
    for (std::size_t i = 0; i < length; ++i) bits[i] = bit(i);
    return BitString(std::move(bits));
}

std::string CantorPoint::str() const {
    if (rule_) return "<rule>";
    std::string out = prefix_.str();
    if (!out.empty()) out += ",";
    return out + "(" + period_.str() + ")";
}

Rational CantorDistance::value() const {
    switch (kind) {
        case Kind::zero: return Rational(0);
        case Kind::exact: return Rational::pow2(-static_cast<long>(exponent));
        case Kind::agree_up_to_budget: break;
    }
    throw Error(Errc::precondition_failed, "distance undetermined within budget");
}

std::string CantorDistance::str() const {
    if (kind == Kind::agree_up_to_budget) return "agree-up-to-" + std::to_string(exponent);
    return value().str();
}

CantorDistance cantor_dist(const CantorPoint& x, const CantorPoint& y, std::uint64_t budget) {
    if (budget == 0) throw Error(Errc::precondition_failed, "cantor_dist budget must be >= 1");
    std::uint64_t decisive = budget;
    bool exact_equality_possible = false;
    if (x.is_periodic() && y.is_periodic()) {
        // Past both prefixes the pair repeats with period lcm(|p_x|, |p_y|).
        const std::uint64_t head = std::max(x.prefix().size(), y.prefix().size());
        const std::uint64_t cycle = std::lcm<std::uint64_t>(x.period().size(), y.period().size());
        if (head + cycle <= budget) {
            decisive = head + cycle;
            exact_equality_possible = true;
        }
    }
    for (std::uint64_t m = 0; m < decisive; ++m) {
        if (x.bit(m) != y.bit(m)) return {CantorDistance::Kind::exact, m};
    }
    if (exact_equality_possible) return {CantorDistance::Kind::zero, 0};
    return {CantorDistance::Kind::agree_up_to_budget, budget};
}

EmbeddingApprox embed_point(const CantorPoint& x, std::uint64_t precision) {
    if (precision == 0) throw Error(Errc::precondition_failed, "embed_point precision must be >= 1");
    // Horner evaluation of sum_{i<p} 2 x(i) 3^(p-1-i), divided by 3^p.
    BigInt acc = 0;
    for (std::uint64_t i = 0; i < precision; ++i) {
        acc *= 3;
        if (x.bit(i)) acc += 2;
    }
    const BigInt scale = pow_big(3, precision);
    return {Rational(acc, scale), Rational(BigInt(1), scale)};
}

std::optional<Rational> embed_exact(const CantorPoint& x) {
    if (!x.is_periodic()) return std::nullopt;
    auto digits_value = [](const BitString& bits) {
        BigInt acc = 0;
        for (auto b : bits.bits()) {
            acc *= 3;
            if (b) acc += 2;
        }
        return acc;
    };
    const auto p = x.prefix().size();
    const auto l = x.period().size();
    // h(x) = P/3^p + 3^-p * Q/(3^l - 1), where P, Q are the base-3 digit values.
    const BigInt head = digits_value(x.prefix());
    const BigInt cycle = digits_value(x.period());
    const BigInt three_p = pow_big(3, p);
    const BigInt three_l = pow_big(3, l);
    return Rational(head, three_p) + Rational(cycle, three_p * (three_l - 1));
}

}  // namespace bwkit
