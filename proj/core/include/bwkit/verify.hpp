#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bwkit/certificates.hpp"
#include "bwkit/family.hpp"
#include "bwkit/separation.hpp"
#include "bwkit/sequence.hpp"
#include "bwkit/tree.hpp"

// Checkers evaluate instances directly; none of them calls a reduction or
// solver.

namespace bwkit {

/// Least failing modulus n with selector positions v < w.
struct CauchyViolation {
    std::uint64_t n = 0;
    std::uint64_t v = 0;
    std::uint64_t w = 0;
};

struct CauchyResult {
    std::optional<CauchyViolation> violation;
    bool passed() const noexcept { return !violation; }
    std::string str() const;
};

/// Checks every recorded modulus over the selector. A fast certificate is
/// also held to positions >= n whatever s it records.
CauchyResult verify_cauchy(const CauchyCertificate& cert, const RationalSequence& x);

/// Row i with the least selector value j on the wrong side; j is empty when
/// the strong form finds no settle entry for row i.
struct CohesiveViolation {
    std::uint64_t i = 0;
    std::optional<std::uint64_t> j;
};

struct CohesiveResult {
    std::optional<CohesiveViolation> violation;
    bool passed() const noexcept { return !violation; }
    std::string str() const;
};

/// Checks each settle entry over selector values j >= s. With strong_levels,
/// every row i < strong_levels must have an entry and all are checked from
/// the largest of their thresholds.
CohesiveResult verify_cohesive(const CohesiveWitness& witness, const SetFamily& family,
                               std::optional<std::size_t> strong_levels = std::nullopt);

struct SeparatorViolation {
    std::uint64_t n = 0;
    unsigned side = 0;  ///< 0: n in A_0 but not in S; 1: n in A_1 and in S
};

struct SeparatorResult {
    std::optional<SeparatorViolation> violation;
    bool passed() const noexcept { return !violation; }
    std::string str() const;
};

/// A_0 subset S over [0, range) first, then S disjoint from A_1. Throws
/// not_ground_truth when membership in A_i is not decidable, and
/// separator_undefined when range exceeds S's domain.
SeparatorResult verify_separator(const SeparatorSet& s, const SeparationInstance& problem, std::uint64_t range);

struct BranchResult {
    std::optional<std::size_t> failing_length;
    bool passed() const noexcept { return !failing_length; }
    std::string str() const;
};

/// Every prefix of the branch must be a member at its recorded stage.
BranchResult verify_branch(const BranchPrefix& branch, const SigmaTree& tree);

struct AccumulationResult {
    std::optional<std::size_t> failing_level;
    bool passed() const noexcept { return !failing_level; }
    std::string str() const;
};

/// The chain must run through levels 1, 2, ... with each cell inside its
/// predecessor and holding approx; with a recorded budget each cell must also
/// hold >= threshold of the terms below the horizon.
AccumulationResult verify_accumulation(const AccumulationPoint& point, const RationalSequence& x);

}  // namespace bwkit
