#include "bwkit/tree.hpp"

#include <algorithm>
#include <string>

#include "bwkit/dyadic.hpp"
#include "bwkit/error.hpp"

namespace bwkit {

namespace {

bool on_branch(const CantorPoint& branch, const BitString& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (branch.bit(i) != sigma[i]) return false;
    }
    return true;
}

// Snapshot index range [first, last) of the greatest listed stage <= s.
std::pair<std::size_t, std::size_t> snapshot(const SigmaTree::StageList& list, std::uint64_t s) {
    const auto& e = list.entries;
    std::size_t last = 0;
    while (last < e.size() && e[last].stage <= s) ++last;
    if (last == 0) return {0, 0};
    std::size_t first = last - 1;
    while (first > 0 && e[first - 1].stage == e[last - 1].stage) --first;
    return {first, last};
}

void validate_stage_list(const SigmaTree::StageList& list) {
    const auto& e = list.entries;
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i].stage < e[i - 1].stage) {
            throw Error(Errc::invariant_violation, "stage list not sorted by stage",
                        "/repr/stages/" + std::to_string(i));
        }
    }
    // Every node of a snapshot must survive (as a prefix) into the next one.
    std::size_t begin = 0;
    while (begin < e.size()) {
        std::size_t end = begin;
        while (end < e.size() && e[end].stage == e[begin].stage) ++end;
        if (end == e.size()) break;
        std::size_t next_end = end;
        while (next_end < e.size() && e[next_end].stage == e[end].stage) ++next_end;
        for (std::size_t i = begin; i < end; ++i) {
            const bool kept = std::any_of(e.begin() + static_cast<std::ptrdiff_t>(end),
                                          e.begin() + static_cast<std::ptrdiff_t>(next_end),
                                          [&](const SigmaTree::StageEntry& later) { return e[i].node.is_prefix_of(later.node); });
            if (!kept) {
                throw Error(Errc::invariant_violation,
                            "node " + e[i].node.str() + " at stage " + std::to_string(e[i].stage) +
                                " is absent at stage " + std::to_string(e[end].stage),
                            "/repr/stages/" + std::to_string(i));
            }
        }
        begin = end;
    }
}

// Witness counting for the sequence-derived tree over indices 0..stage.
class CellCounter {
public:
    CellCounter(const RationalSequence& x, std::uint64_t stage) {
        terms_.reserve(stage + 1);
        for (std::uint64_t j = 0; j <= stage; ++j) terms_.push_back(x.term(j));
    }

    bool member(const BitString& sigma) const {
        if (sigma.size() > DyadicInterval::max_level) return false;
        const auto cell = DyadicInterval::from_path(sigma);
        std::size_t found = 0;
        for (const auto& t : terms_) {
            if (found >= sigma.size()) break;
            if (cell.contains(t)) ++found;
        }
        return found >= sigma.size();
    }

    bool extension(const BitString& sigma, std::size_t length) const {
        if (!member(sigma)) return false;
        if (sigma.size() >= length) return true;
        return extension(sigma.appended(0), length) || extension(sigma.appended(1), length);
    }

private:
    std::vector<Rational> terms_;
};

}  // namespace

SigmaTree::SigmaTree(Repr repr, std::shared_ptr<const Provenance> provenance) : provenance_(std::move(provenance)) {
    if (const auto* list = std::get_if<StageList>(&repr)) validate_stage_list(*list);
    repr_ = std::make_shared<const Repr>(std::move(repr));
}

SigmaTree SigmaTree::full_binary() { return SigmaTree(FullBinary{}); }
SigmaTree SigmaTree::single_branch(CantorPoint branch) { return SigmaTree(Branches{{std::move(branch)}}); }
SigmaTree SigmaTree::branch_union(std::vector<CantorPoint> branches) { return SigmaTree(Branches{std::move(branches)}); }
SigmaTree SigmaTree::stage_list(std::vector<StageEntry> entries) { return SigmaTree(StageList{std::move(entries)}); }

bool SigmaTree::member_at_stage(const BitString& sigma, std::uint64_t stage) const {
    struct Visit {
        const BitString& sigma;
        std::uint64_t stage;
        bool operator()(const FullBinary&) const { return true; }
        bool operator()(const Branches& b) const {
            if (sigma.size() > stage) return false;
            return std::any_of(b.branches.begin(), b.branches.end(),
                               [&](const CantorPoint& p) { return on_branch(p, sigma); });
        }
        bool operator()(const StageList& list) const {
            const auto [first, last] = snapshot(list, stage);
            for (std::size_t i = first; i < last; ++i) {
                if (sigma.is_prefix_of(list.entries[i].node)) return true;
            }
            return false;
        }
        bool operator()(const FromSequence& f) const { return CellCounter(f.source, stage).member(sigma); }
    };
    return std::visit(Visit{sigma, stage}, *repr_);
}

std::function<bool(const BitString&)> SigmaTree::member_oracle(std::uint64_t stage) const {
    if (const auto* f = std::get_if<FromSequence>(repr_.get())) {
        auto counter = std::make_shared<const CellCounter>(f->source, stage);
        return [counter](const BitString& sigma) { return counter->member(sigma); };
    }
    return [tree = *this, stage](const BitString& sigma) { return tree.member_at_stage(sigma, stage); };
}

bool SigmaTree::has_extension_at_stage(const BitString& sigma, std::size_t length, std::uint64_t stage) const {
    if (length < sigma.size()) return false;
    struct Visit {
        const BitString& sigma;
        std::size_t length;
        std::uint64_t stage;
        bool operator()(const FullBinary&) const { return true; }
        bool operator()(const Branches& b) const {
            if (length > stage) return false;
            return std::any_of(b.branches.begin(), b.branches.end(),
                               [&](const CantorPoint& p) { return on_branch(p, sigma); });
        }
        bool operator()(const StageList& list) const {
            const auto [first, last] = snapshot(list, stage);
            for (std::size_t i = first; i < last; ++i) {
                const auto& node = list.entries[i].node;
                if (node.size() >= length && sigma.is_prefix_of(node)) return true;
            }
            return false;
        }
        bool operator()(const FromSequence& f) const { return CellCounter(f.source, stage).extension(sigma, length); }
    };
    return std::visit(Visit{sigma, length, stage}, *repr_);
}

std::optional<bool> SigmaTree::limit_has_extension(const BitString& sigma, std::size_t length) const {
    if (length < sigma.size()) return false;
    struct Visit {
        const BitString& sigma;
        std::size_t length;
        std::optional<bool> operator()(const FullBinary&) const { return true; }
        std::optional<bool> operator()(const Branches& b) const {
            return std::any_of(b.branches.begin(), b.branches.end(),
                               [&](const CantorPoint& p) { return on_branch(p, sigma); });
        }
        std::optional<bool> operator()(const StageList& list) const {
            if (list.entries.empty()) return false;
            const auto [first, last] = snapshot(list, list.entries.back().stage);
            for (std::size_t i = first; i < last; ++i) {
                const auto& node = list.entries[i].node;
                if (node.size() >= length && sigma.is_prefix_of(node)) return true;
            }
            return false;
        }
        std::optional<bool> operator()(const FromSequence&) const { return std::nullopt; }
    };
    return std::visit(Visit{sigma, length}, *repr_);
}

std::optional<std::size_t> SigmaTree::ground_truth_depth() const {
    struct Visit {
        std::optional<std::size_t> operator()(const FullBinary&) const { return 0; }
        std::optional<std::size_t> operator()(const Branches&) const { return 0; }
        std::optional<std::size_t> operator()(const StageList& list) const {
            std::size_t deepest = 0;
            for (const auto& e : list.entries) deepest = std::max(deepest, e.node.size());
            return deepest;
        }
        std::optional<std::size_t> operator()(const FromSequence&) const { return std::nullopt; }
    };
    return std::visit(Visit{}, *repr_);
}

bool tree_member_at_stage(const SigmaTree& tree, const BitString& sigma, std::uint64_t stage) {
    return tree.member_at_stage(sigma, stage);
}

}  // namespace bwkit
