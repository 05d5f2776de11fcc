#include <memory>

#include "bwkit/error.hpp"
#include "bwkit/instance.hpp"
#include "bwkit/reductions.hpp"

namespace bwkit {

std::uint64_t pair(std::uint64_t a, std::uint64_t b) { return (a + b) * (a + b + 1) / 2 + b; }

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t z) {
    std::uint64_t w = 0;
    while ((w + 1) * (w + 2) / 2 <= z) ++w;
    const std::uint64_t b = z - w * (w + 1) / 2;
    return {w - b, b};
}

namespace detail {

bool eval_tree_side(const Predicate::TreeSide& side, std::uint64_t x, std::uint64_t y, std::uint64_t n) {
    const BitString sigma = BitString::from_code(n);
    const auto [length, s0] = unpair(x);
    const auto dying = sigma.appended(static_cast<std::uint8_t>(side.side));
    const auto living = sigma.appended(static_cast<std::uint8_t>(1 - side.side));
    return side.tree.has_extension_at_stage(dying, length, y) || !side.tree.has_extension_at_stage(living, length, s0);
}

}  // namespace detail

SeparationInstance swkl_to_separation(const SigmaTree& tree) {
    auto provenance = std::make_shared<Provenance>();
    provenance->derived_by = "swkl_to_separation";
    provenance->source = std::make_shared<const Instance>(Instance{tree});
    return SeparationInstance(Predicate(Predicate::TreeSide{tree, 0}), Predicate(Predicate::TreeSide{tree, 1}), true,
                              std::move(provenance));
}

bool SeparatorSet::contains(std::uint64_t n) const {
    if (n >= bits.size()) {
        throw Error(Errc::separator_undefined,
                    "separator defined below " + std::to_string(bits.size()) + ", queried at " + std::to_string(n));
    }
    return bits[n] != 0;
}

BranchPrefix separator_to_branch(const SeparatorSet& s, const SigmaTree& /*tree*/, std::size_t depth,
                                 std::uint64_t stage) {
    BitString path;
    while (path.size() < depth) path.push_back(s.contains(path.code()) ? 1 : 0);
    return {path, stage, std::nullopt};
}

std::optional<SeparatorSet> exact_separator(const SigmaTree& tree, std::size_t depth) {
    if (depth == 0) return SeparatorSet{};
    const auto problem = swkl_to_separation(tree);
    const std::uint64_t codes = (std::uint64_t{1} << depth) - 1;
    std::vector<std::uint8_t> bits(codes);
    for (std::uint64_t c = 0; c < codes; ++c) {
        const auto in_a0 = problem.in_set(0, c);
        if (!in_a0) return std::nullopt;
        bits[c] = *in_a0 ? 1 : 0;
    }
    return SeparatorSet{BitString(std::move(bits))};
}

}  // namespace bwkit
