#include <memory>
#include <string>

#include "bwkit/dyadic.hpp"
#include "bwkit/error.hpp"
#include "bwkit/instance.hpp"
#include "bwkit/reductions.hpp"

namespace bwkit {

SigmaTree bw_to_swkl(const RationalSequence& x) {
    auto provenance = std::make_shared<Provenance>();
    provenance->derived_by = "bw_to_swkl";
    provenance->source = std::make_shared<const Instance>(Instance{x});
    return SigmaTree(SigmaTree::FromSequence{x}, std::move(provenance));
}

BranchPoint branch_to_point(const RationalSequence& x, const BitString& branch, std::uint64_t stage) {
    const SigmaTree tree(SigmaTree::FromSequence{x});
    if (!tree.member_at_stage(branch, stage)) {
        throw Error(Errc::not_a_node, branch.str() + " is not a node at stage " + std::to_string(stage));
    }
    // Greedy choice: the least fresh index in each successive cell. The
    // |b| witnesses of the deepest cell lie in every coarser cell, so the
    // greedy indices never overtake them.
    std::vector<std::uint64_t> picks;
    std::uint64_t next = 0;
    for (std::size_t n = 0; n + 1 < branch.size(); ++n) {
        const auto cell = DyadicInterval::from_path(branch.prefix(n + 1));
        bool found = false;
        for (std::uint64_t j = next; j <= stage; ++j) {
            if (cell.contains(x.term(j))) {
                picks.push_back(j);
                next = j + 1;
                found = true;
                break;
            }
        }
        if (!found) {
            throw Error(Errc::witness_exhausted,
                        "no fresh index in cell " + branch.prefix(n + 1).str() + " up to stage " + std::to_string(stage));
        }
    }
    const auto cell = DyadicInterval::from_path(branch);
    return {cell.left(), cell.width(), Selector(std::move(picks))};
}

CauchyCertificate fast_certificate(const BranchPoint& point) {
    CauchyCertificate cert;
    cert.selector = point.selector;
    cert.rate = Rate::fast;
    for (std::uint64_t n = 0; n < point.selector.size(); ++n) cert.moduli.push_back({n, n});
    return cert;
}

}  // namespace bwkit
