#include "bwkit/separation.hpp"

#include <set>

#include "bwkit/error.hpp"

namespace bwkit {

namespace {

// Witness set {y : B(x, y; n)} for a fixed (x, n): a finite part plus an
// optional ray [ray_from, inf) with finitely many holes.
struct WitnessSet {
    std::set<std::uint64_t> finite;
    std::optional<std::uint64_t> ray_from;
    std::set<std::uint64_t> holes;

    bool nonempty() const { return !finite.empty() || ray_from.has_value(); }
    void remove(std::uint64_t y) {
        finite.erase(y);
        if (ray_from && y >= *ray_from) holes.insert(y);
    }
    void add(std::uint64_t y) {
        if (ray_from && y >= *ray_from) {
            holes.erase(y);
        } else {
            finite.insert(y);
        }
    }
    std::optional<std::uint64_t> least() const {
        std::optional<std::uint64_t> best;
        if (!finite.empty()) best = *finite.begin();
        if (ray_from) {
            std::uint64_t y = *ray_from;
            while (holes.count(y)) ++y;
            if (!best || y < *best) best = y;
        }
        return best;
    }
};

std::optional<WitnessSet> witnesses(const Predicate& p, std::uint64_t x, std::uint64_t n);

struct WitnessVisit {
    std::uint64_t x;
    std::uint64_t n;
    std::optional<WitnessSet> operator()(const Predicate::Const& c) const {
        WitnessSet w;
        if (c.value) w.ray_from = 0;
        return w;
    }
    std::optional<WitnessSet> operator()(const Predicate::Affine& a) const {
        WitnessSet w;
        w.finite.insert(a.a * x + a.c);
        return w;
    }
    std::optional<WitnessSet> operator()(const Predicate::AtLeastX&) const {
        WitnessSet w;
        w.ray_from = x;
        return w;
    }
    std::optional<WitnessSet> operator()(const Predicate::XBelow& b) const {
        if (x >= b.limit) return WitnessSet{};
        return witnesses(b.inner, x, n);
    }
    std::optional<WitnessSet> operator()(const Predicate::NBelow& b) const {
        return witnesses(n < b.bound ? b.then : b.otherwise, x, n);
    }
    std::optional<WitnessSet> operator()(const Predicate::NMod& m) const {
        return witnesses(m.cases[n % m.cases.size()], x, n);
    }
    std::optional<WitnessSet> operator()(const Predicate::WithTable& t) const {
        auto w = witnesses(t.base, x, n);
        if (!w) return std::nullopt;
        for (const auto& [key, value] : t.table) {
            if (key[0] != x || key[2] != n) continue;
            if (value) {
                w->add(key[1]);
            } else {
                w->remove(key[1]);
            }
        }
        return w;
    }
    std::optional<WitnessSet> operator()(const Predicate::Minimal& m) const {
        auto w = witnesses(m.inner, x, n);
        if (!w) return std::nullopt;
        WitnessSet out;
        if (auto least = w->least()) out.finite.insert(*least);
        return out;
    }
    std::optional<WitnessSet> operator()(const Predicate::TreeSide&) const { return std::nullopt; }
    std::optional<WitnessSet> operator()(const Predicate::Custom&) const { return std::nullopt; }
};

std::optional<WitnessSet> witnesses(const Predicate& p, std::uint64_t x, std::uint64_t n) {
    return std::visit(WitnessVisit{x, n}, p.node());
}

// Past this x no catalog rule changes its witness structure.
std::uint64_t x_threshold(const Predicate& p, std::uint64_t n) {
    struct Visit {
        std::uint64_t n;
        std::uint64_t operator()(const Predicate::Const&) const { return 0; }
        std::uint64_t operator()(const Predicate::Affine&) const { return 0; }
        std::uint64_t operator()(const Predicate::AtLeastX&) const { return 0; }
        std::uint64_t operator()(const Predicate::XBelow& b) const {
            return std::max(b.limit, x_threshold(b.inner, n));
        }
        std::uint64_t operator()(const Predicate::NBelow& b) const {
            return x_threshold(n < b.bound ? b.then : b.otherwise, n);
        }
        std::uint64_t operator()(const Predicate::NMod& m) const {
            return x_threshold(m.cases[n % m.cases.size()], n);
        }
        std::uint64_t operator()(const Predicate::WithTable& t) const {
            std::uint64_t out = x_threshold(t.base, n);
            for (const auto& [key, value] : t.table) {
                if (key[2] == n) out = std::max(out, key[0] + 1);
            }
            return out;
        }
        std::uint64_t operator()(const Predicate::Minimal& m) const { return x_threshold(m.inner, n); }
        std::uint64_t operator()(const Predicate::TreeSide&) const { return 0; }
        std::uint64_t operator()(const Predicate::Custom&) const { return 0; }
    };
    return std::visit(Visit{n}, p.node());
}

}  // namespace

const Predicate::Node& Predicate::node() const noexcept { return *node_; }

Predicate::Predicate() : Predicate(Const{false}) {}

Predicate::Predicate(Node node) {
    if (const auto* m = std::get_if<NMod>(&node); m && m->cases.empty()) {
        throw Error(Errc::invariant_violation, "n_mod needs at least one case");
    }
    if (const auto* t = std::get_if<TreeSide>(&node); t && t->side > 1) {
        throw Error(Errc::invariant_violation, "tree side must be 0 or 1");
    }
    node_ = std::make_shared<const Node>(std::move(node));
}

Predicate Predicate::constant(bool value) { return Predicate(Const{value}); }
Predicate Predicate::affine(std::uint64_t a, std::uint64_t c) { return Predicate(Affine{a, c}); }
Predicate Predicate::at_least_x() { return Predicate(AtLeastX{}); }
Predicate Predicate::x_below(std::uint64_t limit, Predicate inner) { return Predicate(XBelow{limit, std::move(inner)}); }
Predicate Predicate::n_below(std::uint64_t bound, Predicate then, Predicate otherwise) {
    return Predicate(NBelow{bound, std::move(then), std::move(otherwise)});
}
Predicate Predicate::n_mod(std::vector<Predicate> cases) { return Predicate(NMod{std::move(cases)}); }
Predicate Predicate::with_table(std::map<std::array<std::uint64_t, 3>, bool> table, Predicate base) {
    return Predicate(WithTable{std::move(table), std::move(base)});
}

bool Predicate::eval(std::uint64_t x, std::uint64_t y, std::uint64_t n) const {
    struct Visit {
        std::uint64_t x, y, n;
        bool operator()(const Const& c) const { return c.value; }
        bool operator()(const Affine& a) const { return y == a.a * x + a.c; }
        bool operator()(const AtLeastX&) const { return y >= x; }
        bool operator()(const XBelow& b) const { return x < b.limit && b.inner.eval(x, y, n); }
        bool operator()(const NBelow& b) const { return (n < b.bound ? b.then : b.otherwise).eval(x, y, n); }
        bool operator()(const NMod& m) const { return m.cases[n % m.cases.size()].eval(x, y, n); }
        bool operator()(const WithTable& t) const {
            auto it = t.table.find({x, y, n});
            return it != t.table.end() ? it->second : t.base.eval(x, y, n);
        }
        bool operator()(const Minimal& m) const {
            if (!m.inner.eval(x, y, n)) return false;
            for (std::uint64_t smaller = 0; smaller < y; ++smaller) {
                if (m.inner.eval(x, smaller, n)) return false;
            }
            return true;
        }
        bool operator()(const TreeSide& t) const { return detail::eval_tree_side(t, x, y, n); }
        bool operator()(const Custom& c) const { return c.eval(x, y, n); }
    };
    return std::visit(Visit{x, y, n}, *node_);
}

std::optional<bool> Predicate::total(std::uint64_t n) const {
    if (const auto* t = std::get_if<TreeSide>(node_.get())) {
        // n codes sigma; B_side is total iff sigma is not in A_side.
        const BitString sigma = BitString::from_code(n);
        const auto depth = t->tree.ground_truth_depth();
        if (!depth) return std::nullopt;
        const unsigned dead = t->side;
        const unsigned alive = 1 - t->side;
        const std::size_t top = std::max(sigma.size() + 1, *depth);
        for (std::size_t length = sigma.size() + 1; length <= top; ++length) {
            const auto dead_ext = t->tree.limit_has_extension(sigma.appended(static_cast<std::uint8_t>(dead)), length);
            const auto alive_ext = t->tree.limit_has_extension(sigma.appended(static_cast<std::uint8_t>(alive)), length);
            if (!dead_ext || !alive_ext) return std::nullopt;
            if (!*dead_ext && *alive_ext) return false;
        }
        return true;
    }
    if (const auto* c = std::get_if<Custom>(node_.get())) {
        return c->total ? c->total(n) : std::nullopt;
    }
    if (const auto* m = std::get_if<Minimal>(node_.get())) return m->inner.total(n);
    const std::uint64_t threshold = x_threshold(*this, n);
    for (std::uint64_t x = 0; x <= threshold; ++x) {
        auto w = witnesses(*this, x, n);
        if (!w) return std::nullopt;
        if (!w->nonempty()) return false;
    }
    return true;
}

Predicate make_unique_minimal(const Predicate& b) {
    if (std::holds_alternative<Predicate::Minimal>(b.node())) return b;
    return Predicate(Predicate::Minimal{b});
}

SeparationInstance::SeparationInstance(Predicate b0, Predicate b1, bool disjointness_promise,
                                       std::shared_ptr<const Provenance> provenance)
    : b_{std::move(b0), std::move(b1)},
      unique_{make_unique_minimal(b_[0]), make_unique_minimal(b_[1])},
      disjoint_(disjointness_promise),
      provenance_(std::move(provenance)) {}

const Predicate& SeparationInstance::b(unsigned side) const {
    if (side > 1) throw Error(Errc::precondition_failed, "separation side must be 0 or 1");
    return b_[side];
}

const Predicate& SeparationInstance::unique(unsigned side) const {
    if (side > 1) throw Error(Errc::precondition_failed, "separation side must be 0 or 1");
    return unique_[side];
}

std::optional<bool> SeparationInstance::in_set(unsigned side, std::uint64_t n) const {
    auto total = b(side).total(n);
    if (!total) return std::nullopt;
    return !*total;
}

}  // namespace bwkit
