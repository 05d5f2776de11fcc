#include "bwkit/sequence.hpp"

#include <string>

#include "bwkit/error.hpp"

namespace bwkit {

CantorSequence::CantorSequence() : period_{CantorPoint()}, shape_(PeriodicShape{0, 1}) {}

CantorSequence CantorSequence::listed(std::vector<CantorPoint> prefix, std::vector<CantorPoint> period) {
    if (period.empty()) throw Error(Errc::invariant_violation, "listed Cantor sequence needs a nonempty period");
    CantorSequence s;
    s.shape_ = PeriodicShape{prefix.size(), period.size()};
    s.prefix_ = std::move(prefix);
    s.period_ = std::move(period);
    return s;
}

CantorSequence CantorSequence::from_rule(Rule rule, std::optional<PeriodicShape> shape) {
    CantorSequence s;
    s.prefix_.clear();
    s.period_.clear();
    s.rule_ = std::make_shared<const Rule>(std::move(rule));
    s.shape_ = shape;
    return s;
}

CantorPoint CantorSequence::point(std::uint64_t k) const {
    if (rule_) return (*rule_)(k);
    if (k < prefix_.size()) return prefix_[k];
    return period_[(k - prefix_.size()) % period_.size()];
}

namespace {

void require_unit(const Rational& q, const std::string& where) {
    if (!q.in_unit_interval()) {
        throw Error(Errc::invariant_violation, "term " + q.str() + " outside [0,1]", where);
    }
}

Rational binary_truncation(const Rational& q, std::uint64_t bits) {
    BigInt scaled = q.numerator();
    scaled <<= bits;
    BigInt floored;
    const BigInt den = q.denominator();
    mpz_fdiv_q(floored.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return Rational(floored, pow_big(2, bits));
}

struct Validator {
    void operator()(const RationalSequence::Periodic& p) const {
        if (p.period.empty()) throw Error(Errc::invariant_violation, "periodic sequence needs a nonempty period", "/repr/period");
        for (std::size_t i = 0; i < p.prefix.size(); ++i) require_unit(p.prefix[i], "/repr/prefix/" + std::to_string(i));
        for (std::size_t i = 0; i < p.period.size(); ++i) require_unit(p.period[i], "/repr/period/" + std::to_string(i));
    }
    void operator()(const RationalSequence::Constant& c) const { require_unit(c.value, "/repr/value"); }
    void operator()(const RationalSequence::Harmonic&) const {}
    void operator()(const RationalSequence::Alternating& a) const {
        require_unit(a.a, "/repr/a");
        require_unit(a.b, "/repr/b");
    }
    void operator()(const RationalSequence::BinaryWalk& w) const { require_unit(w.target, "/repr/target"); }
    void operator()(const RationalSequence::Table& t) const {
        for (const auto& [index, value] : t.entries) require_unit(value, "/repr/entries/" + std::to_string(index));
        require_unit(t.fallback, "/repr/default");
    }
    void operator()(const RationalSequence::Embedded& e) const {
        if (e.precision == 0) throw Error(Errc::invariant_violation, "embedding precision must be >= 1", "/repr/precision");
    }
};

}  // namespace

RationalSequence::RationalSequence(Repr repr, std::shared_ptr<const Provenance> provenance)
    : provenance_(std::move(provenance)) {
    std::visit(Validator{}, repr);
    repr_ = std::make_shared<const Repr>(std::move(repr));
}

RationalSequence RationalSequence::periodic(std::vector<Rational> prefix, std::vector<Rational> period) {
    return RationalSequence(Periodic{std::move(prefix), std::move(period)});
}
RationalSequence RationalSequence::constant(Rational value) { return RationalSequence(Constant{std::move(value)}); }
RationalSequence RationalSequence::harmonic() { return RationalSequence(Harmonic{}); }
RationalSequence RationalSequence::alternating(Rational a, Rational b) {
    return RationalSequence(Alternating{std::move(a), std::move(b)});
}
RationalSequence RationalSequence::binary_walk(Rational target) { return RationalSequence(BinaryWalk{std::move(target)}); }
RationalSequence RationalSequence::table(std::map<std::uint64_t, Rational> entries, Rational fallback) {
    return RationalSequence(Table{std::move(entries), std::move(fallback)});
}

Rational RationalSequence::term(std::uint64_t i) const {
    struct Eval {
        std::uint64_t i;
        Rational operator()(const Periodic& p) const {
            if (i < p.prefix.size()) return p.prefix[i];
            return p.period[(i - p.prefix.size()) % p.period.size()];
        }
        Rational operator()(const Constant& c) const { return c.value; }
        Rational operator()(const Harmonic&) const {
            return Rational(BigInt(1), BigInt(static_cast<unsigned long>(i)) + 1);
        }
        Rational operator()(const Alternating& a) const { return (i % 2 == 0) ? a.a : a.b; }
        Rational operator()(const BinaryWalk& w) const { return binary_truncation(w.target, i); }
        Rational operator()(const Table& t) const {
            auto it = t.entries.find(i);
            return it == t.entries.end() ? t.fallback : it->second;
        }
        Rational operator()(const Embedded& e) const {
            const CantorPoint x = e.points.point(i);
            if (auto exact = embed_exact(x)) return *exact;
            return embed_point(x, e.precision).approx;
        }
    };
    return std::visit(Eval{i}, *repr_);
}

std::optional<PeriodicShape> RationalSequence::periodic_shape() const {
    struct Shape {
        std::optional<PeriodicShape> operator()(const Periodic& p) const {
            return PeriodicShape{p.prefix.size(), p.period.size()};
        }
        std::optional<PeriodicShape> operator()(const Constant&) const { return PeriodicShape{0, 1}; }
        std::optional<PeriodicShape> operator()(const Harmonic&) const { return std::nullopt; }
        std::optional<PeriodicShape> operator()(const Alternating&) const { return PeriodicShape{0, 2}; }
        std::optional<PeriodicShape> operator()(const BinaryWalk& w) const {
            // Dyadic targets are reached exactly once 2^i clears the denominator.
            const BigInt den = w.target.denominator();
            if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
            return PeriodicShape{mpz_sizeinbase(den.get_mpz_t(), 2) - 1, 1};
        }
        std::optional<PeriodicShape> operator()(const Table& t) const {
            if (t.entries.empty()) return PeriodicShape{0, 1};
            return PeriodicShape{t.entries.rbegin()->first + 1, 1};
        }
        std::optional<PeriodicShape> operator()(const Embedded& e) const { return e.points.shape(); }
    };
    return std::visit(Shape{}, *repr_);
}

const CantorSequence* RationalSequence::cantor_points() const {
    if (const auto* e = std::get_if<Embedded>(repr_.get())) return &e->points;
    return nullptr;
}

Rational eval_sequence(const RationalSequence& x, std::uint64_t i) { return x.term(i); }

RationalSequence embed_sequence(CantorSequence points, std::uint32_t precision,
                                std::shared_ptr<const Provenance> provenance) {
    return RationalSequence(RationalSequence::Embedded{std::move(points), precision}, std::move(provenance));
}

}  // namespace bwkit
