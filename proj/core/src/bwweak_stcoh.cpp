#include <algorithm>
#include <limits>
#include <memory>
#include <string>

#include "bwkit/error.hpp"
#include "bwkit/instance.hpp"
#include "bwkit/reductions.hpp"

namespace bwkit {

SetFamily bwweak_to_stcoh(const RationalSequence& x, Convention convention) {
    auto provenance = std::make_shared<Provenance>();
    provenance->derived_by = "bwweak_to_stcoh";
    provenance->source = std::make_shared<const Instance>(Instance{x});
    provenance->convention = std::string(to_string(convention));
    return SetFamily(SetFamily::FromSequence{x, convention}, std::move(provenance));
}

Selector subsequence_from_cohesive(const Selector& f, const RationalSequence& /*x*/) {
    return Selector(f.values());
}

RationalSequence stcoh_to_bwweak(const SetFamily& family) {
    auto points = CantorSequence::from_rule([family](std::uint64_t i) { return family.column(i); },
                                            family.column_shape());
    auto provenance = std::make_shared<Provenance>();
    provenance->derived_by = "stcoh_to_bwweak";
    provenance->source = std::make_shared<const Instance>(Instance{family});
    return embed_sequence(std::move(points), 64, std::move(provenance));
}

std::uint64_t modulus_for_levels(std::size_t levels) {
    const BigInt target = pow_big(3, levels);
    std::uint64_t n = 0;
    BigInt power = 1;
    while (power < target) {
        power *= 2;
        ++n;
    }
    return n;
}

CohesiveWitness cohesive_from_cauchy(const CauchyCertificate& cert, const SetFamily& family, std::size_t levels) {
    const std::uint64_t needed = modulus_for_levels(levels);
    std::uint64_t settle = std::numeric_limits<std::uint64_t>::max();
    for (const auto& m : cert.moduli) {
        if (m.n >= needed) settle = std::min(settle, m.s);
    }
    if (settle == std::numeric_limits<std::uint64_t>::max()) {
        throw Error(Errc::precondition_failed,
                    "certificate has no modulus n >= " + std::to_string(needed) + " for " + std::to_string(levels) +
                        " levels");
    }
    if (settle >= cert.selector.size()) {
        throw Error(Errc::precondition_failed, "modulus settles at position " + std::to_string(settle) +
                                                   " beyond the selector's " + std::to_string(cert.selector.size()));
    }
    CohesiveWitness witness{cert.selector, {}, cert.budget};
    const std::uint64_t j = cert.selector[settle];
    for (std::uint64_t i = 0; i < levels; ++i) {
        witness.settle.push_back({i, j, family.member(i, j) ? Side::in : Side::out});
    }
    return witness;
}

}  // namespace bwkit
