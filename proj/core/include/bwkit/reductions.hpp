#pragma once

#include <cstddef>
#include <cstdint>

#include "bwkit/certificates.hpp"
#include "bwkit/family.hpp"
#include "bwkit/seqcode.hpp"
#include "bwkit/separation.hpp"
#include "bwkit/sequence.hpp"
#include "bwkit/tree.hpp"

namespace bwkit {

// ---- BW <-> Sigma^0_1-WKL -------------------------------------------------

/// Tree whose nodes sigma need |sigma| distinct witnesses j <= stage with
/// x_j in the closed dyadic cell of sigma. Infinite for every sequence.
SigmaTree bw_to_swkl(const RationalSequence& x);

struct BranchPoint {
    Rational approx;    ///< left endpoint of the branch cell
    Rational error;     ///< 2^-|b|
    Selector selector;  ///< |b| - 1 indices, the n-th one inside cell(b|n+1)
};

/// Back-translation of a node of bw_to_swkl(x) into an approximate
/// accumulation point with a fast-converging selector prefix.
/// Throws not_a_node / witness_exhausted.
BranchPoint branch_to_point(const RationalSequence& x, const BitString& branch, std::uint64_t stage);

/// Fast certificate for branch_to_point's selector: moduli (n, n) for
/// n < |selector|.
CauchyCertificate fast_certificate(const BranchPoint& point);

// ---- Sigma^0_1-WKL <-> Sigma^0_2 separation --------------------------------

/// Cantor pairing <a, b> = (a+b)(a+b+1)/2 + b and its inverse.
std::uint64_t pair(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t z);

/// Numbers code strings via BitString::code. A_0 holds sigma when, at some
/// length l, sigma^0 has no extension in the tree while sigma^1 does; A_1
/// symmetrically. Presented in normal form over x = <l, s0>:
///   B_0(<l,s0>, y; sigma) = ext(sigma^0, l) at stage y  or  not ext(sigma^1, l) at stage s0.
SeparationInstance swkl_to_separation(const SigmaTree& tree);

/// Follows S from the root: append 1 when code(sigma) is in S, else 0.
/// Throws separator_undefined when S is not defined on a visited code.
BranchPrefix separator_to_branch(const SeparatorSet& s, const SigmaTree& tree, std::size_t depth,
                                 std::uint64_t stage);

/// S = A_0 restricted to codes of strings shorter than depth, decided from
/// the tree's ground truth; nullopt when the tree has none.
std::optional<SeparatorSet> exact_separator(const SigmaTree& tree, std::size_t depth);

// ---- Sigma^0_2 separation -> BW ------------------------------------------

/// Maximum valid code s < k, where s is valid when it decodes and
/// B'_side(x, (s)_x; n) holds for every position x. Returns the empty code 1
/// when no such s exists. Throws budget_exceeded when k > code_budget.
SeqCode f_code(const SeparationInstance& p, unsigned side, std::uint64_t n, std::uint64_t k,
               std::uint64_t code_budget);
/// Length of f_code.
std::uint64_t g_len(const SeparationInstance& p, unsigned side, std::uint64_t n, std::uint64_t k,
                    std::uint64_t code_budget);
/// 0 if g_0(n,k) >= g_1(n,k), else 1.
std::uint8_t h_bit(const SeparationInstance& p, std::uint64_t k, std::uint64_t n, std::uint64_t code_budget);
/// The rule-backed Cantor point n -> h_bit(p, k, n).
CantorPoint h_point(const SeparationInstance& p, std::uint64_t k, std::uint64_t code_budget);

/// k -> h(h_k), lazily evaluated.
RationalSequence separation_to_bw(const SeparationInstance& p, std::uint64_t code_budget,
                                  std::uint32_t precision = 64);

SeparatorSet point_to_separator(const BitString& accumulation_prefix);

// ---- BW_weak <-> StCOH -----------------------------------------------------

SetFamily bwweak_to_stcoh(const RationalSequence& x, Convention convention = Convention::corrected);

/// Returns f unchanged after checking monotonicity. The subsequence it
/// selects is Cauchy whenever f enumerates a strongly cohesive set for
/// bwweak_to_stcoh(x); verify_cauchy checks that claim.
Selector subsequence_from_cohesive(const Selector& f, const RationalSequence& x);

/// Embeds the Cantor sequence x_i(n) = [i in R_n].
RationalSequence stcoh_to_bwweak(const SetFamily& family);

/// Back-translation for stcoh_to_bwweak: uses a recorded modulus n with
/// 2^-n <= 3^-levels, so the selected columns agree on rows < levels past
/// that point. Throws precondition_failed when no such modulus exists.
CohesiveWitness cohesive_from_cauchy(const CauchyCertificate& cert, const SetFamily& family, std::size_t levels);

/// Least n with 2^n >= 3^levels.
std::uint64_t modulus_for_levels(std::size_t levels);

}  // namespace bwkit
