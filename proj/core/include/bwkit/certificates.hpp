#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bwkit/bitstring.hpp"
#include "bwkit/dyadic.hpp"
#include "bwkit/rational.hpp"
#include "bwkit/selector.hpp"

namespace bwkit {

/// Finite search limits. Every solver output records the budget it ran under.
struct Budget {
    std::uint64_t horizon = 4096;       ///< sequence indices inspected: [0, horizon)
    std::uint64_t depth = 8;            ///< precision level / tree depth
    std::uint64_t stage = 4096;         ///< enumeration stage for Sigma^0_1 trees
    std::uint64_t code_budget = 1'000'000;
    std::uint64_t threshold = 8;        ///< minimum witness count per cell

    friend bool operator==(const Budget&, const Budget&) = default;
};

/// All v, w >= s (positions in the selector) satisfy |x_f(v) - x_f(w)| < 2^-n.
struct Modulus {
    std::uint64_t n = 0;
    std::uint64_t s = 0;

    friend bool operator==(const Modulus&, const Modulus&) = default;
};

enum class Rate { slow, fast };

struct CauchyCertificate {
    Selector selector;
    std::vector<Modulus> moduli;
    Rate rate = Rate::slow;
    std::optional<Budget> budget;
};

enum class Side { in, out };

/// Every selector value j >= s is in R_i (Side::in) or outside it (Side::out).
struct Settle {
    std::uint64_t i = 0;
    std::uint64_t s = 0;
    Side side = Side::in;

    friend bool operator==(const Settle&, const Settle&) = default;
};

struct CohesiveWitness {
    Selector selector;
    std::vector<Settle> settle;
    std::optional<Budget> budget;
};

/// A node of a Sigma^0_1 tree together with the stage at which all of its
/// prefixes are members.
struct BranchPrefix {
    BitString bits;
    std::uint64_t verified_at_stage = 0;
    std::optional<Budget> budget;
};

/// Characteristic prefix of a set over [0, bits.size()).
struct SeparatorSet {
    BitString bits;

    std::uint64_t defined_below() const noexcept { return bits.size(); }
    /// Throws Error(separator_undefined) outside the inspected range.
    bool contains(std::uint64_t n) const;
};

/// Nested dyadic chain at levels 1..depth plus a point inside all of them.
struct AccumulationPoint {
    std::vector<DyadicInterval> chain;
    Rational approx;
    /// True when approx is a proven accumulation point (periodic input).
    bool exact = false;
    std::optional<Budget> budget;
};

}  // namespace bwkit
