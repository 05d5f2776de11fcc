#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "bwkit/bitstring.hpp"
#include "bwkit/cantor.hpp"
#include "bwkit/provenance.hpp"
#include "bwkit/sequence.hpp"

namespace bwkit {

/// A Sigma^0_1 0/1-tree given by a stage-monotone enumeration of nodes; the
/// tree is the downward closure of everything ever enumerated.
class SigmaTree {
public:
    /// Every string is enumerated at stage 0.
    struct FullBinary {};
    /// For each branch b, the node b|s is enumerated at stage s. One branch
    /// is the single-branch form.
    struct Branches {
        std::vector<CantorPoint> branches;
    };
    struct StageEntry {
        std::uint64_t stage = 0;
        BitString node;
    };
    /// Snapshot semantics: the nodes listed under the greatest listed stage
    /// <= s are the enumeration at stage s. Each snapshot must be covered
    /// by the next one.
    struct StageList {
        std::vector<StageEntry> entries;
    };
    /// The tree built from a bounded sequence: sigma is enumerated at stage s
    /// iff at least |sigma| distinct indices j <= s have x_j in the closed
    /// dyadic cell addressed by sigma.
    struct FromSequence {
        RationalSequence source;
    };
    using Repr = std::variant<FullBinary, Branches, StageList, FromSequence>;

    explicit SigmaTree(Repr repr, std::shared_ptr<const Provenance> provenance = nullptr);

    static SigmaTree full_binary();
    static SigmaTree single_branch(CantorPoint branch);
    static SigmaTree branch_union(std::vector<CantorPoint> branches);
    static SigmaTree stage_list(std::vector<StageEntry> entries);

    /// sigma is a prefix of some node enumerated by stage s.
    bool member_at_stage(const BitString& sigma, std::uint64_t stage) const;
    /// member_at_stage with the stage fixed; reuses per-stage work across
    /// many queries.
    std::function<bool(const BitString&)> member_oracle(std::uint64_t stage) const;
    /// Some member of length `length` extending sigma at stage s.
    bool has_extension_at_stage(const BitString& sigma, std::size_t length, std::uint64_t stage) const;

    /// Membership-of-an-extension in the limit tree when decidable from the
    /// representation; nullopt otherwise.
    std::optional<bool> limit_has_extension(const BitString& sigma, std::size_t length) const;
    /// Beyond this length, limit_has_extension(sigma, l) for l > |sigma| no
    /// longer changes. nullopt when the limit tree is not decidable.
    std::optional<std::size_t> ground_truth_depth() const;

    const Repr& repr() const noexcept { return *repr_; }
    const Provenance* provenance() const noexcept { return provenance_.get(); }

private:
    std::shared_ptr<const Repr> repr_;
    std::shared_ptr<const Provenance> provenance_;
};

bool tree_member_at_stage(const SigmaTree& tree, const BitString& sigma, std::uint64_t stage);

}  // namespace bwkit
