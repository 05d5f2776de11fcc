#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "bwkit/cantor.hpp"
#include "bwkit/provenance.hpp"
#include "bwkit/rational.hpp"

namespace bwkit {

/// term(i) == term(i + period_length) for all i >= prefix_length.
struct PeriodicShape {
    std::uint64_t prefix_length = 0;
    std::uint64_t period_length = 1;

    friend bool operator==(const PeriodicShape&, const PeriodicShape&) = default;
};

/// A sequence k -> x_k in 2^N.
class CantorSequence {
public:
    using Rule = std::function<CantorPoint(std::uint64_t)>;

    CantorSequence();
    static CantorSequence listed(std::vector<CantorPoint> prefix, std::vector<CantorPoint> period);
    static CantorSequence from_rule(Rule rule, std::optional<PeriodicShape> shape = std::nullopt);

    CantorPoint point(std::uint64_t k) const;
    std::optional<PeriodicShape> shape() const { return shape_; }

    bool is_listed() const noexcept { return !rule_; }
    const std::vector<CantorPoint>& listed_prefix() const noexcept { return prefix_; }
    const std::vector<CantorPoint>& listed_period() const noexcept { return period_; }

private:
    std::vector<CantorPoint> prefix_;
    std::vector<CantorPoint> period_;
    std::shared_ptr<const Rule> rule_;
    std::optional<PeriodicShape> shape_;
};

/// A total, exactly evaluable map N -> Q cap [0,1]; the instance type of
/// BW and BW_weak.
class RationalSequence {
public:
    /// prefix then period repeated forever.
    struct Periodic {
        std::vector<Rational> prefix;
        std::vector<Rational> period;
    };
    struct Constant {
        Rational value;
    };
    /// x_i = 1/(i+1).
    struct Harmonic {};
    /// x_i = a for even i, b for odd i.
    struct Alternating {
        Rational a;
        Rational b;
    };
    /// x_i = floor(target * 2^i) / 2^i, the i-bit binary truncation of target.
    struct BinaryWalk {
        Rational target;
    };
    /// x_i = entries[i] when present, fallback otherwise.
    struct Table {
        std::map<std::uint64_t, Rational> entries;
        Rational fallback;
    };
    /// x_i = h(points(i)); exact for periodic points, truncated at
    /// `precision` ternary digits for rule-backed points.
    struct Embedded {
        CantorSequence points;
        std::uint32_t precision = 64;
    };
    using Repr = std::variant<Periodic, Constant, Harmonic, Alternating, BinaryWalk, Table, Embedded>;

    /// Validates that every stored term lies in [0,1].
    explicit RationalSequence(Repr repr, std::shared_ptr<const Provenance> provenance = nullptr);

    static RationalSequence periodic(std::vector<Rational> prefix, std::vector<Rational> period);
    static RationalSequence constant(Rational value);
    static RationalSequence harmonic();
    static RationalSequence alternating(Rational a, Rational b);
    static RationalSequence binary_walk(Rational target);
    static RationalSequence table(std::map<std::uint64_t, Rational> entries, Rational fallback);

    Rational term(std::uint64_t i) const;
    /// Known eventual periodicity of the term map, if any.
    std::optional<PeriodicShape> periodic_shape() const;
    /// The underlying Cantor sequence for embedded sequences.
    const CantorSequence* cantor_points() const;

    const Repr& repr() const noexcept { return *repr_; }
    const Provenance* provenance() const noexcept { return provenance_.get(); }

private:
    std::shared_ptr<const Repr> repr_;
    std::shared_ptr<const Provenance> provenance_;
};

Rational eval_sequence(const RationalSequence& x, std::uint64_t i);

/// i -> h(x_i).
RationalSequence embed_sequence(CantorSequence points, std::uint32_t precision = 64,
                                std::shared_ptr<const Provenance> provenance = nullptr);

}  // namespace bwkit
