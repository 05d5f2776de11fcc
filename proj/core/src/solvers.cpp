#include "bwkit/solvers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "bwkit/error.hpp"
#include "bwkit/reductions.hpp"

namespace bwkit {

namespace {

constexpr std::uint64_t max_cell_depth = 24;

std::vector<DyadicInterval> ancestors(const DyadicInterval& cell) {
    std::vector<DyadicInterval> chain;
    for (unsigned level = 1; level <= cell.level(); ++level) {
        chain.emplace_back(level, cell.index() >> (cell.level() - level));
    }
    return chain;
}

}  // namespace

AccumulationPoint find_accumulation_real(const RationalSequence& x, const Budget& budget) {
    if (budget.depth < 1) throw Error(Errc::precondition_failed, "depth must be at least 1");
    if (budget.depth > max_cell_depth) {
        throw Error(Errc::precondition_failed, "depth above " + std::to_string(max_cell_depth));
    }
    const auto depth = static_cast<unsigned>(budget.depth);

    if (const auto shape = x.periodic_shape()) {
        Rational least = x.term(shape->prefix_length);
        for (std::uint64_t i = 1; i < shape->period_length; ++i) {
            least = std::min(least, x.term(shape->prefix_length + i));
        }
        AccumulationPoint point{{}, least, true, budget};
        DyadicInterval cell(0, 0);
        for (unsigned level = 1; level <= depth; ++level) {
            cell = cell.child(0).contains(least) ? cell.child(0) : cell.child(1);
            point.chain.push_back(cell);
        }
        return point;
    }

    // Each term counts toward every closed cell holding it: one, or two when
    // it sits on an interior boundary.
    const std::uint64_t cells = std::uint64_t{1} << depth;
    std::vector<std::uint64_t> counts(cells, 0);
    const Rational scale = Rational::pow2(depth);
    for (std::uint64_t j = 0; j < budget.horizon; ++j) {
        const Rational t = x.term(j) * scale;
        const BigInt k = t.floor();
        const std::uint64_t index = std::min<std::uint64_t>(k.get_ui(), cells - 1);
        ++counts[index];
        if (t == Rational(k, 1) && index > 0 && index == k.get_ui()) ++counts[index - 1];
    }
    for (std::uint64_t k = 0; k < cells; ++k) {
        if (counts[k] >= budget.threshold) {
            const DyadicInterval cell(depth, k);
            return {ancestors(cell), cell.left(), false, budget};
        }
    }
    throw Error(Errc::budget_exhausted, "no level-" + std::to_string(depth) + " cell holds " +
                                            std::to_string(budget.threshold) + " of the first " +
                                            std::to_string(budget.horizon) + " terms");
}

BitString find_accumulation_cantor(const CantorSequence& points, const Budget& budget) {
    std::map<BitString, std::uint64_t> counts;
    for (std::uint64_t k = 0; k < budget.horizon; ++k) ++counts[points.point(k).take(budget.depth)];
    for (const auto& [prefix, count] : counts) {
        if (count >= budget.threshold) return prefix;
    }
    throw Error(Errc::budget_exhausted, "no depth-" + std::to_string(budget.depth) + " prefix is shared by " +
                                            std::to_string(budget.threshold) + " of the first " +
                                            std::to_string(budget.horizon) + " points");
}

std::uint64_t stabilization_index(const CantorSequence& points, std::size_t depth, std::uint64_t horizon) {
    if (horizon == 0) return 0;
    const BitString last = points.point(horizon - 1).take(depth);
    std::uint64_t k = horizon - 1;
    while (k > 0 && points.point(k - 1).take(depth) == last) --k;
    return k;
}

BranchPrefix find_branch(const SigmaTree& tree, const Budget& budget) {
    const auto member = tree.member_oracle(budget.stage);
    if (!member(BitString::parse("0")) && !member(BitString::parse("1"))) {
        throw Error(Errc::empty_tree_at_stage, "no node of length 1 by stage " + std::to_string(budget.stage));
    }
    // Preorder with 0 first meets the nodes of each length in lexicographic
    // order, so the first node of the greatest length reached is the answer.
    BitString best;
    std::function<bool(BitString&)> dfs = [&](BitString& sigma) {
        if (sigma.size() > best.size()) best = sigma;
        if (sigma.size() == budget.depth) return true;
        for (std::uint8_t bit = 0; bit < 2; ++bit) {
            BitString child = sigma.appended(bit);
            if (member(child) && dfs(child)) return true;
        }
        return false;
    };
    BitString root;
    dfs(root);
    return {best, budget.stage, budget};
}

CohesiveWitness build_strongly_cohesive(const SetFamily& family, std::size_t levels, const Budget& budget) {
    if (levels < 1) throw Error(Errc::precondition_failed, "levels must be at least 1");
    // Pattern bit i is 0 when j is in R_i, so "all in" is the least pattern.
    const auto pattern = [&](std::uint64_t j) {
        std::vector<std::uint8_t> bits(levels);
        for (std::size_t i = 0; i < levels; ++i) bits[i] = family.member(i, j) ? 0 : 1;
        return BitString(std::move(bits));
    };

    BitString chosen;
    if (const auto shape = family.joint_shape(levels)) {
        chosen = pattern(shape->prefix_length);
        for (std::uint64_t j = shape->prefix_length + 1; j < shape->prefix_length + shape->period_length; ++j) {
            chosen = std::min(chosen, pattern(j));
        }
    } else {
        std::map<BitString, std::uint64_t> counts;
        for (std::uint64_t j = 0; j < budget.horizon; ++j) ++counts[pattern(j)];
        if (counts.empty()) throw Error(Errc::no_infinite_cell, "empty-cells: no index below the horizon");
        std::uint64_t most = 0;
        for (const auto& [p, count] : counts) {
            if (count > most) {
                most = count;
                chosen = p;
            }
        }
    }

    std::vector<std::uint64_t> members;
    for (std::uint64_t j = 0; j < budget.horizon; ++j) {
        if (pattern(j) == chosen) members.push_back(j);
    }
    if (members.empty()) {
        throw Error(Errc::horizon_too_small, "cell " + chosen.str() + " has no member below horizon " +
                                                 std::to_string(budget.horizon));
    }
    CohesiveWitness witness{Selector(std::move(members)), {}, budget};
    for (std::size_t i = 0; i < levels; ++i) witness.settle.push_back({i, 0, chosen[i] == 0 ? Side::in : Side::out});
    return witness;
}

CauchyCertificate extract_slow_cauchy(const RationalSequence& x, const Budget& budget) {
    const auto family = bwweak_to_stcoh(x, Convention::corrected);
    const auto witness = build_strongly_cohesive(family, budget.depth + 2, budget);
    CauchyCertificate cert;
    cert.selector = subsequence_from_cohesive(witness.selector, x);
    cert.rate = Rate::slow;
    cert.budget = budget;
    for (std::uint64_t n = 0; n <= budget.depth; ++n) cert.moduli.push_back({n, 0});
    return cert;
}

CauchyCertificate thin_to_fast(const CauchyCertificate& cert, const RationalSequence& x, const Budget& budget) {
    const auto& f = cert.selector;
    std::vector<Rational> values;
    values.reserve(f.size());
    for (const auto j : f.values()) values.push_back(x.term(j));

    // hi[v] - lo[v] is the diameter of the tail from position v.
    std::vector<Rational> lo(values), hi(values);
    for (std::size_t v = values.size(); v-- > 1;) {
        lo[v - 1] = std::min(lo[v - 1], lo[v]);
        hi[v - 1] = std::max(hi[v - 1], hi[v]);
    }
    for (const auto& m : cert.moduli) {
        if (m.s < values.size() && hi[m.s] - lo[m.s] >= Rational::pow2(-static_cast<long>(m.n))) {
            throw Error(Errc::precondition_failed, "input certificate fails at n = " + std::to_string(m.n));
        }
    }

    std::vector<std::uint64_t> picks;
    for (std::uint64_t n = 0; n <= budget.depth; ++n) {
        std::optional<std::uint64_t> settle;
        for (const auto& m : cert.moduli) {
            if (m.n >= n && (!settle || m.s < *settle)) settle = m.s;
        }
        if (!settle) {
            const Rational eps = Rational::pow2(-static_cast<long>(n));
            for (std::size_t v = 0; v < values.size(); ++v) {
                if (hi[v] - lo[v] < eps) {
                    settle = v;
                    break;
                }
            }
        }
        std::uint64_t t = settle.value_or(values.size());
        if (!picks.empty()) t = std::max(t, picks.back() + 1);
        if (t >= values.size()) {
            throw Error(Errc::horizon_too_small, "no settle point for n = " + std::to_string(n) +
                                                     " within the selector's " + std::to_string(values.size()) +
                                                     " entries");
        }
        picks.push_back(t);
    }

    CauchyCertificate fast;
    std::vector<std::uint64_t> g;
    for (const auto t : picks) g.push_back(f[t]);
    fast.selector = Selector(std::move(g));
    fast.rate = Rate::fast;
    fast.budget = budget;
    for (std::uint64_t n = 0; n <= budget.depth; ++n) fast.moduli.push_back({n, n});
    return fast;
}

}  // namespace bwkit
