#pragma once

#include <string_view>
#include <variant>

#include "bwkit/family.hpp"
#include "bwkit/separation.hpp"
#include "bwkit/sequence.hpp"
#include "bwkit/tree.hpp"

namespace bwkit {

/// The four instance kinds: BW / BW_weak sequences, Sigma^0_1 trees,
/// Sigma^0_2 separation problems and set families for (St)COH.
struct Instance {
    std::variant<RationalSequence, SigmaTree, SeparationInstance, SetFamily> value;
};

/// "rational_sequence" | "sigma_tree" | "separation" | "set_family"
std::string_view kind_name(const Instance& instance) noexcept;

}  // namespace bwkit
