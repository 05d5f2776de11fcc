#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "bwkit/provenance.hpp"
#include "bwkit/tree.hpp"

namespace bwkit {

/// A decidable three-place predicate B(x, y; n) drawn from a closed rule
/// catalog (plus evaluator callbacks for library use). Catalog rules also
/// decide totality, i.e. whether forall x exists y B(x, y; n).
class Predicate {
public:
    struct Const {
        bool value = false;
    };
    /// y == a*x + c
    struct Affine {
        std::uint64_t a = 1;
        std::uint64_t c = 0;
    };
    /// y >= x
    struct AtLeastX {};
    struct XBelow;
    struct NBelow;
    struct NMod;
    struct WithTable;
    struct Minimal;
    struct TreeSide;
    struct Custom;
    using Node = std::variant<Const, Affine, AtLeastX, XBelow, NBelow, NMod, WithTable, Minimal, TreeSide, Custom>;

    Predicate();
    explicit Predicate(Node node);

    static Predicate constant(bool value);
    static Predicate affine(std::uint64_t a, std::uint64_t c);
    static Predicate at_least_x();
    static Predicate x_below(std::uint64_t limit, Predicate inner);
    static Predicate n_below(std::uint64_t bound, Predicate then, Predicate otherwise);
    static Predicate n_mod(std::vector<Predicate> cases);
    static Predicate with_table(std::map<std::array<std::uint64_t, 3>, bool> table, Predicate base);

    bool eval(std::uint64_t x, std::uint64_t y, std::uint64_t n) const;
    /// Ground truth of "forall x exists y B(x, y; n)"; nullopt if the
    /// representation does not decide it.
    std::optional<bool> total(std::uint64_t n) const;

    const Node& node() const noexcept;

private:
    std::shared_ptr<const Node> node_;
};

/// x < limit and inner
struct Predicate::XBelow {
    std::uint64_t limit = 0;
    Predicate inner;
};
/// n < bound ? then : otherwise
struct Predicate::NBelow {
    std::uint64_t bound = 0;
    Predicate then;
    Predicate otherwise;
};
/// cases[n mod cases.size()]
struct Predicate::NMod {
    std::vector<Predicate> cases;
};
/// Finite truth table keyed by (x, y, n) overriding `base`.
struct Predicate::WithTable {
    std::map<std::array<std::uint64_t, 3>, bool> table;
    Predicate base;
};
/// inner(x, y; n) and no smaller y' satisfies inner(x, y'; n).
struct Predicate::Minimal {
    Predicate inner;
};
/// One side of the separation problem derived from a Sigma^0_1 tree; see
/// swkl_to_separation.
struct Predicate::TreeSide {
    SigmaTree tree;
    unsigned side = 0;
};
/// Library-only evaluator callback; not serializable.
struct Predicate::Custom {
    std::function<bool(std::uint64_t, std::uint64_t, std::uint64_t)> eval;
    std::function<std::optional<bool>(std::uint64_t)> total;
};

Predicate make_unique_minimal(const Predicate& b);

namespace detail {
/// Evaluation of the tree-derived normal form (defined with the reduction).
bool eval_tree_side(const Predicate::TreeSide& side, std::uint64_t x, std::uint64_t y, std::uint64_t n);
}  // namespace detail

/// Two disjoint Sigma^0_2 sets in normal form:
/// n in complement(A_i) <=> forall x exists y B_i(x, y; n).
class SeparationInstance {
public:
    SeparationInstance(Predicate b0, Predicate b1, bool disjointness_promise = true,
                       std::shared_ptr<const Provenance> provenance = nullptr);

    const Predicate& b(unsigned side) const;
    /// make_unique_minimal(b(side)); what the f/g/h construction reads.
    const Predicate& unique(unsigned side) const;
    bool disjointness_promise() const noexcept { return disjoint_; }

    /// Ground truth of n in A_side, when decidable.
    std::optional<bool> in_set(unsigned side, std::uint64_t n) const;

    const Provenance* provenance() const noexcept { return provenance_.get(); }

private:
    std::array<Predicate, 2> b_;
    std::array<Predicate, 2> unique_;
    bool disjoint_;
    std::shared_ptr<const Provenance> provenance_;
};

}  // namespace bwkit
