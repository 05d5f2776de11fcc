#include <memory>
#include <string>

#include "bwkit/error.hpp"
#include "bwkit/instance.hpp"
#include "bwkit/reductions.hpp"

namespace bwkit {

namespace {

struct CodeSearch {
    const Predicate& b;
    std::uint64_t n;
    std::uint64_t k;
    std::uint64_t best = 1;
    std::uint64_t best_length = 0;

    // Valid codes are closed under prefixes and a prefix's code divides the
    // full code, so walking valid prefixes below k reaches every valid code < k.
    void walk(std::uint64_t code, std::uint64_t position) {
        const std::uint64_t p = nth_prime(position);
        std::uint64_t factor = p;
        for (std::uint64_t v = 0;; ++v) {
            if (factor > (k - 1) / code) return;
            const std::uint64_t next = code * factor;
            if (b.eval(position, v, n)) {
                if (next > best) {
                    best = next;
                    best_length = position + 1;
                }
                walk(next, position + 1);
            }
            if (factor > (k - 1) / p) return;
            factor *= p;
        }
    }
};

CodeSearch run_search(const SeparationInstance& p, unsigned side, std::uint64_t n, std::uint64_t k,
                      std::uint64_t code_budget) {
    if (k > code_budget) {
        throw Error(Errc::budget_exceeded,
                    "code bound " + std::to_string(k) + " exceeds budget " + std::to_string(code_budget));
    }
    CodeSearch search{p.unique(side), n, k};
    if (k > 1) search.walk(1, 0);
    return search;
}

}  // namespace

SeqCode f_code(const SeparationInstance& p, unsigned side, std::uint64_t n, std::uint64_t k,
               std::uint64_t code_budget) {
    return SeqCode{BigInt(static_cast<unsigned long>(run_search(p, side, n, k, code_budget).best))};
}

std::uint64_t g_len(const SeparationInstance& p, unsigned side, std::uint64_t n, std::uint64_t k,
                    std::uint64_t code_budget) {
    return run_search(p, side, n, k, code_budget).best_length;
}

std::uint8_t h_bit(const SeparationInstance& p, std::uint64_t k, std::uint64_t n, std::uint64_t code_budget) {
    return g_len(p, 0, n, k, code_budget) >= g_len(p, 1, n, k, code_budget) ? 0 : 1;
}

CantorPoint h_point(const SeparationInstance& p, std::uint64_t k, std::uint64_t code_budget) {
    return CantorPoint::from_rule([p, k, code_budget](std::uint64_t n) { return h_bit(p, k, n, code_budget); });
}

RationalSequence separation_to_bw(const SeparationInstance& p, std::uint64_t code_budget, std::uint32_t precision) {
    auto points = CantorSequence::from_rule([p, code_budget](std::uint64_t k) { return h_point(p, k, code_budget); });
    auto provenance = std::make_shared<Provenance>();
    provenance->derived_by = "separation_to_bw";
    provenance->source = std::make_shared<const Instance>(Instance{p});
    provenance->code_budget = code_budget;
    return embed_sequence(std::move(points), precision, std::move(provenance));
}

SeparatorSet point_to_separator(const BitString& accumulation_prefix) { return SeparatorSet{accumulation_prefix}; }

}  // namespace bwkit
