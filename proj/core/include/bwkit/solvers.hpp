#pragma once

#include <cstddef>
#include <cstdint>

#include "bwkit/certificates.hpp"
#include "bwkit/family.hpp"
#include "bwkit/sequence.hpp"
#include "bwkit/tree.hpp"

namespace bwkit {

/// Accumulation point of a [0,1]-sequence. Eventually periodic input gives
/// the least value repeated in the period (exact). Otherwise the leftmost
/// level-depth cell holding >= threshold of the first horizon terms.
/// Throws budget_exhausted when no cell qualifies.
AccumulationPoint find_accumulation_real(const RationalSequence& x, const Budget& budget);

/// Lexicographically least depth-prefix shared by >= threshold of the first
/// horizon points. Throws budget_exhausted when none qualifies.
BitString find_accumulation_cantor(const CantorSequence& points, const Budget& budget);

/// Least K with point(k)|depth constant for K <= k < horizon.
std::uint64_t stabilization_index(const CantorSequence& points, std::size_t depth, std::uint64_t horizon);

/// Leftmost node of greatest length <= depth in the tree at budget.stage.
/// Throws empty_tree_at_stage when neither child of the root is present.
BranchPrefix find_branch(const SigmaTree& tree, const Budget& budget);

/// Selector into a single infinite cell of the first `levels` rows. Exact
/// (least pattern recurring in the joint period) when the family is
/// eventually periodic on those rows; otherwise the most populated pattern
/// among indices below the horizon.
CohesiveWitness build_strongly_cohesive(const SetFamily& family, std::size_t levels, const Budget& budget);

/// Slow-rate Cauchy certificate through the strongly cohesive set of
/// bwweak_to_stcoh(x) at levels depth + 2; moduli (n, 0) for n <= depth.
CauchyCertificate extract_slow_cauchy(const RationalSequence& x, const Budget& budget);

/// Thins a verified slow certificate to one with moduli (n, n), n <= depth.
/// Throws precondition_failed if the input does not verify, and
/// horizon_too_small when the selector runs out.
CauchyCertificate thin_to_fast(const CauchyCertificate& cert, const RationalSequence& x, const Budget& budget);

}  // namespace bwkit
