#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "bwkit/bitstring.hpp"
#include "bwkit/rational.hpp"

namespace bwkit {

/// A point of Cantor space 2^N. Either eventually periodic (exact: equality,
/// distance and the embedded real are decidable) or backed by an evaluator
/// rule (approximable only).
class CantorPoint {
public:
    using Rule = std::function<std::uint8_t(std::uint64_t)>;

    /// Default: the all-zero point.
    CantorPoint();

    static CantorPoint periodic(BitString prefix, BitString period);
    static CantorPoint constant(std::uint8_t bit);
    static CantorPoint from_rule(Rule rule);

    /// "prefix,(period)" or "(period)", e.g. "1,(0)" or "(01)".
    static CantorPoint parse(std::string_view text);

    std::uint8_t bit(std::uint64_t n) const;
    BitString take(std::size_t length) const;

    bool is_periodic() const noexcept { return !rule_; }
    /// Only meaningful for periodic points.
    const BitString& prefix() const noexcept { return prefix_; }
    const BitString& period() const noexcept { return period_; }

    /// Periodic points only; rule-backed points yield "<rule>".
    std::string str() const;

private:
    BitString prefix_;
    BitString period_;
    std::shared_ptr<const Rule> rule_;
};

/// Outcome of comparing two Cantor points: dist = 2^-m where m is the first
/// index of disagreement, 0 for equal points.
struct CantorDistance {
    enum class Kind { zero, exact, agree_up_to_budget };
    Kind kind = Kind::zero;
    /// First disagreement index for Kind::exact, the budget otherwise.
    std::uint64_t exponent = 0;

    /// Exact value for zero/exact; throws for the indeterminate marker.
    Rational value() const;
    std::string str() const;
};

CantorDistance cantor_dist(const CantorPoint& x, const CantorPoint& y, std::uint64_t budget);

/// Truncation of h(x) = sum 2 x(i) / 3^(i+1) with its error bound 3^-precision.
struct EmbeddingApprox {
    Rational approx;
    Rational error_bound;
};

EmbeddingApprox embed_point(const CantorPoint& x, std::uint64_t precision);

/// Exact h(x) for eventually periodic points (geometric series summed in
/// closed form); nullopt for rule-backed points.
std::optional<Rational> embed_exact(const CantorPoint& x);

}  // namespace bwkit
