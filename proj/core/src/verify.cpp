#include "bwkit/verify.hpp"

#include <algorithm>

#include "bwkit/error.hpp"

namespace bwkit {

std::string CauchyResult::str() const {
    if (!violation) return "pass";
    return "fail(" + std::to_string(violation->n) + ", " + std::to_string(violation->v) + ", " +
           std::to_string(violation->w) + ")";
}

std::string CohesiveResult::str() const {
    if (!violation) return "pass";
    if (!violation->j) return "fail(" + std::to_string(violation->i) + ", unsettled)";
    return "fail(" + std::to_string(violation->i) + ", " + std::to_string(*violation->j) + ")";
}

std::string SeparatorResult::str() const {
    if (!violation) return "pass";
    return "fail(" + std::to_string(violation->n) + ")";
}

std::string BranchResult::str() const {
    if (!failing_length) return "pass";
    return "fail(" + std::to_string(*failing_length) + ")";
}

CauchyResult verify_cauchy(const CauchyCertificate& cert, const RationalSequence& x) {
    const auto& f = cert.selector.values();
    std::vector<Rational> values;
    values.reserve(f.size());
    for (const auto j : f) values.push_back(x.term(j));
    // lo/hi over positions > v.
    const std::size_t len = values.size();
    std::vector<Rational> lo(values), hi(values);
    for (std::size_t v = len; v-- > 0;) {
        if (v + 1 < len) {
            lo[v] = std::min(values[v + 1], lo[v + 1]);
            hi[v] = std::max(values[v + 1], hi[v + 1]);
        }
    }

    auto moduli = cert.moduli;
    std::stable_sort(moduli.begin(), moduli.end(), [](const Modulus& a, const Modulus& b) { return a.n < b.n; });
    for (const auto& m : moduli) {
        const Rational eps = Rational::pow2(-static_cast<long>(m.n));
        const std::uint64_t start = cert.rate == Rate::fast ? std::min(m.s, m.n) : m.s;
        for (std::size_t v = start; v + 1 < len; ++v) {
            if (hi[v] - values[v] < eps && values[v] - lo[v] < eps) continue;
            for (std::size_t w = v + 1; w < len; ++w) {
                if (distance(values[v], values[w]) >= eps) return {CauchyViolation{m.n, v, w}};
            }
        }
    }
    return {};
}

CohesiveResult verify_cohesive(const CohesiveWitness& witness, const SetFamily& family,
                               std::optional<std::size_t> strong_levels) {
    std::vector<Settle> checks = witness.settle;
    if (strong_levels) {
        std::uint64_t common = 0;
        std::vector<Settle> rows;
        for (std::uint64_t i = 0; i < *strong_levels; ++i) {
            const auto it = std::find_if(checks.begin(), checks.end(), [i](const Settle& e) { return e.i == i; });
            if (it == checks.end()) return {CohesiveViolation{i, std::nullopt}};
            common = std::max(common, it->s);
            rows.push_back(*it);
        }
        for (auto& row : rows) row.s = common;
        checks.insert(checks.end(), rows.begin(), rows.end());
    }
    std::optional<CohesiveViolation> first;
    for (const auto& e : checks) {
        for (const auto j : witness.selector.values()) {
            if (j < e.s) continue;
            if (family.member(e.i, j) != (e.side == Side::in)) {
                if (!first || e.i < first->i || (e.i == first->i && j < *first->j)) first = CohesiveViolation{e.i, j};
                break;
            }
        }
    }
    return {first};
}

SeparatorResult verify_separator(const SeparatorSet& s, const SeparationInstance& problem, std::uint64_t range) {
    const auto truth = [&](unsigned side, std::uint64_t n) {
        const auto in = problem.in_set(side, n);
        if (!in) {
            throw Error(Errc::not_ground_truth,
                        "membership of " + std::to_string(n) + " in A_" + std::to_string(side) + " is not decidable");
        }
        return *in;
    };
    for (std::uint64_t n = 0; n < range; ++n) {
        if (truth(0, n) && !s.contains(n)) return {SeparatorViolation{n, 0}};
    }
    for (std::uint64_t n = 0; n < range; ++n) {
        if (truth(1, n) && s.contains(n)) return {SeparatorViolation{n, 1}};
    }
    return {};
}

BranchResult verify_branch(const BranchPrefix& branch, const SigmaTree& tree) {
    for (std::size_t len = 0; len <= branch.bits.size(); ++len) {
        if (!tree.member_at_stage(branch.bits.prefix(len), branch.verified_at_stage)) return {len};
    }
    return {};
}

std::string AccumulationResult::str() const {
    if (!failing_level) return "pass";
    return "fail(" + std::to_string(*failing_level) + ")";
}

AccumulationResult verify_accumulation(const AccumulationPoint& point, const RationalSequence& x) {
    std::vector<Rational> terms;
    if (point.budget) {
        for (std::uint64_t j = 0; j < point.budget->horizon; ++j) terms.push_back(x.term(j));
    }
    for (std::size_t k = 0; k < point.chain.size(); ++k) {
        const auto& cell = point.chain[k];
        const std::size_t level = k + 1;
        if (cell.level() != level || !cell.contains(point.approx)) return {level};
        if (k > 0 && (cell.left() < point.chain[k - 1].left() || cell.right() > point.chain[k - 1].right())) {
            return {level};
        }
        if (point.budget) {
            const auto count = std::count_if(terms.begin(), terms.end(), [&](const Rational& q) { return cell.contains(q); });
            if (static_cast<std::uint64_t>(count) < point.budget->threshold) return {level};
        }
    }
    return {};
}

}  // namespace bwkit
