#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "bwkit/bwkit.hpp"
#include "catalog.hpp"

using namespace bwkit;
using catalog::pt;
using catalog::q;

namespace {

Budget budget(std::uint64_t depth, std::uint64_t horizon = 4096, std::uint64_t threshold = 8) {
    Budget b;
    b.depth = depth;
    b.horizon = horizon;
    b.threshold = threshold;
    b.stage = horizon;
    return b;
}

Errc error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::malformed_syntax;
}

template <class T>
std::string bytes(const T& certificate) {
    return serialize_document(Document{certificate, {}});
}

}  // namespace

TEST_CASE("find_accumulation_real examples") {
    const auto h = find_accumulation_real(RationalSequence::harmonic(), budget(6));
    CHECK(h.approx == q("0"));
    CHECK_FALSE(h.exact);
    CHECK(h.chain.size() == 6);
    CHECK(verify_accumulation(h, RationalSequence::harmonic()).passed());

    const auto alt = find_accumulation_real(RationalSequence::alternating(0, 1), budget(6));
    CHECK(alt.approx == q("0"));
    CHECK(alt.exact);

    const auto p = RationalSequence::periodic(catalog::qs({"1/2"}), catalog::qs({"1/3", "2/3"}));
    const auto a = find_accumulation_real(p, budget(8));
    CHECK(a.approx == q("1/3"));
    CHECK(a.exact);
    CHECK(verify_accumulation(a, p).passed());

    CHECK(error_code([] { find_accumulation_real(RationalSequence::harmonic(), budget(6, 10, 100)); }) ==
          Errc::budget_exhausted);
}

TEST_CASE("exact accumulation agrees with a late-window minimum") {
    for (const auto& [name, x] : catalog::periodic_sequences()) {
        INFO(name);
        // Values seen in the second half of a long window recur forever.
        Rational least(2);
        for (std::uint64_t j = 512; j < 1024; ++j) least = std::min(least, x.term(j));
        const auto a = find_accumulation_real(x, budget(8));
        CHECK(a.exact);
        CHECK(a.approx == least);
        CHECK(verify_accumulation(a, x).passed());
    }
}

TEST_CASE("pigeonhole: threshold * 2^depth terms always suffice") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 120; ++trial) {
        const std::uint64_t depth = 1 + rng() % 6;
        const std::uint64_t threshold = 1 + rng() % 8;
        const std::uint64_t horizon = threshold << depth;
        RationalSequence x = RationalSequence::harmonic();
        if (trial % 2 == 1) {
            const long den = 2 * static_cast<long>(rng() % 50) + 3;
            x = RationalSequence::binary_walk(Rational(BigInt(static_cast<long>(rng() % den)), BigInt(den)));
        }
        INFO(trial);
        AccumulationPoint a;
        CHECK_NOTHROW(a = find_accumulation_real(x, budget(depth, horizon, threshold)));
        CHECK(verify_accumulation(a, x).passed());
    }
}

TEST_CASE("find_accumulation_cantor examples") {
    const auto zeros = CantorSequence::listed({}, {pt("(0)")});
    CHECK(find_accumulation_cantor(zeros, budget(6, 64, 4)) == BitString::repeat(0, 6));
    const auto alt = CantorSequence::listed({}, {pt("(0)"), pt("(1)")});
    CHECK(find_accumulation_cantor(alt, budget(6, 64, 4)) == BitString::repeat(0, 6));
    const auto x = separation_to_bw(catalog::separation_problems()[0].problem, 1'000'000);
    const auto& points = *x.cantor_points();
    const auto k = stabilization_index(points, 8, 300);
    CHECK(find_accumulation_cantor(points, budget(8, 300, 300 - k)).str() == "01010101");
    CHECK(error_code([&] { find_accumulation_cantor(alt, budget(6, 10, 6)); }) == Errc::budget_exhausted);
}

TEST_CASE("find_branch examples") {
    CHECK(find_branch(SigmaTree::full_binary(), budget(8)).bits == BitString::repeat(0, 8));
    CHECK(find_branch(SigmaTree::single_branch(pt("1,(0)")), budget(8)).bits.str() == "10000000");
    Budget b = budget(6);
    b.stage = 6 << 6;
    const auto third = find_branch(bw_to_swkl(RationalSequence::constant(q("1/3"))), b);
    CHECK(third.bits.str() == "010101");
    CHECK(third.verified_at_stage == b.stage);
    CHECK(verify_branch(third, bw_to_swkl(RationalSequence::constant(q("1/3")))).passed());
    using E = SigmaTree::StageEntry;
    const auto late = SigmaTree::stage_list({E{10, BitString::parse("1")}});
    Budget early = budget(4);
    early.stage = 5;
    CHECK(error_code([&] { find_branch(late, early); }) == Errc::empty_tree_at_stage);
}

TEST_CASE("build_strongly_cohesive examples") {
    const auto all = build_strongly_cohesive(SetFamily::periodic_rows({}, pt("(1)")), 4, budget(4, 64));
    CHECK(all.selector == Selector::identity(64));
    for (const auto& e : all.settle) CHECK(e.side == Side::in);

    const auto evens_family = SetFamily::periodic_rows({pt("(10)")}, pt("(1)"));
    const auto evens = build_strongly_cohesive(evens_family, 4, budget(4, 64));
    CHECK(evens.selector.values().front() == 0);
    CHECK(evens.selector.size() == 32);
    for (const auto j : evens.selector.values()) CHECK(j % 2 == 0);
    CHECK(verify_cohesive(evens, evens_family, 4).passed());

    const auto third = bwweak_to_stcoh(RationalSequence::constant(q("1/3")));
    const auto w = build_strongly_cohesive(third, 6, budget(6, 100));
    CHECK(w.selector == Selector::identity(100));
    // 1/6 * 2^i floors to 0, 0, 0, 1, 2, 5 for i = 0..5.
    const Side expected[] = {Side::in, Side::in, Side::in, Side::out, Side::in, Side::out};
    for (std::size_t i = 0; i < 6; ++i) CHECK(w.settle[i].side == expected[i]);

    CHECK(error_code([] { build_strongly_cohesive(bwweak_to_stcoh(RationalSequence::harmonic()), 3, budget(3, 0)); }) ==
          Errc::no_infinite_cell);
}

TEST_CASE("verify_cohesive examples") {
    const auto ones = SetFamily::periodic_rows({}, pt("(1)"));
    CHECK(verify_cohesive({Selector({1, 4, 9}), {{0, 0, Side::in}, {3, 0, Side::in}}, std::nullopt}, ones).passed());
    const auto evens = SetFamily::periodic_rows({pt("(10)")}, pt("(1)"));
    CHECK(verify_cohesive({Selector({1, 3, 5, 7}), {{0, 0, Side::out}}, std::nullopt}, evens).passed());
    const auto r = verify_cohesive({Selector::identity(8), {{0, 0, Side::in}}, std::nullopt}, evens);
    CHECK(r.str() == "fail(0, 1)");
    const auto missing = verify_cohesive({Selector::identity(8), {{0, 0, Side::in}}, std::nullopt}, ones, 2);
    CHECK(missing.str() == "fail(1, unsettled)");
}

TEST_CASE("extract_slow_cauchy examples") {
    const auto alt = RationalSequence::alternating(0, 1);
    const auto c = extract_slow_cauchy(alt, budget(8, 64));
    CHECK(c.rate == Rate::slow);
    for (const auto j : c.selector.values()) CHECK(j % 2 == c.selector[0] % 2);
    CHECK(c.moduli.size() == 9);
    for (const auto& m : c.moduli) CHECK(m.s == 0);
    CHECK(verify_cauchy(c, alt).passed());

    const auto h = extract_slow_cauchy(RationalSequence::harmonic(), budget(5, 256));
    CHECK(verify_cauchy(h, RationalSequence::harmonic()).passed());

    const auto k = extract_slow_cauchy(RationalSequence::constant(q("2/7")), budget(5, 50));
    CHECK(k.selector == Selector::identity(50));
}

TEST_CASE("verify_cauchy examples") {
    const auto constant = RationalSequence::constant(q("3/7"));
    CauchyCertificate any{Selector({2, 5, 11}), {{0, 0}, {4, 0}, {30, 0}}, Rate::slow, std::nullopt};
    CHECK(verify_cauchy(any, constant).passed());
    CauchyCertificate ident{Selector::identity(6), {{1, 0}}, Rate::slow, std::nullopt};
    CHECK(verify_cauchy(ident, RationalSequence::alternating(0, 1)).str() == "fail(1, 0, 1)");
    CauchyCertificate h{Selector::identity(300), {}, Rate::slow, std::nullopt};
    for (std::uint64_t n = 0; n <= 6; ++n) h.moduli.push_back({n, std::uint64_t{2} << n});
    CHECK(verify_cauchy(h, RationalSequence::harmonic()).passed());
    // A fast certificate is checked from min(s, n): a later recorded s does
    // not excuse positions n..s-1.
    CauchyCertificate fast{Selector::identity(300), {{3, 40}}, Rate::fast, std::nullopt};
    const auto r = verify_cauchy(fast, RationalSequence::harmonic());
    REQUIRE_FALSE(r.passed());
    CHECK(r.violation->v == 3);
    CauchyCertificate slow{Selector::identity(300), {{3, 40}}, Rate::slow, std::nullopt};
    CHECK(verify_cauchy(slow, RationalSequence::harmonic()).passed());
}

TEST_CASE("thin_to_fast examples") {
    const auto constant = RationalSequence::constant(q("1/5"));
    CauchyCertificate slow{Selector::identity(20), {{0, 0}, {3, 0}, {6, 0}}, Rate::slow, std::nullopt};
    const auto fast = thin_to_fast(slow, constant, budget(6, 20));
    CHECK(fast.rate == Rate::fast);
    CHECK(fast.selector.values() == std::vector<std::uint64_t>({0, 1, 2, 3, 4, 5, 6}));
    CHECK(verify_cauchy(fast, constant).passed());

    const auto settles = RationalSequence::periodic(catalog::qs({"0", "1", "0", "1", "0"}), catalog::qs({"1/2"}));
    CauchyCertificate late{Selector::identity(20), {}, Rate::slow, std::nullopt};
    for (std::uint64_t n = 0; n <= 6; ++n) late.moduli.push_back({n, 5});
    const auto thinned = thin_to_fast(late, settles, budget(6, 20));
    CHECK(thinned.selector[0] == 5);
    CHECK(verify_cauchy(thinned, settles).passed());

    const auto alt = RationalSequence::alternating(0, 1);
    CauchyCertificate bad{Selector::identity(10), {{1, 0}}, Rate::slow, std::nullopt};
    CHECK(error_code([&] { thin_to_fast(bad, alt, budget(4, 10)); }) == Errc::precondition_failed);

    CauchyCertificate short_sel{Selector::identity(3), {{0, 0}}, Rate::slow, std::nullopt};
    CHECK(error_code([&] { thin_to_fast(short_sel, constant, budget(6, 3)); }) == Errc::horizon_too_small);
}

TEST_CASE("verify_separator examples") {
    const auto parity = catalog::separation_problems()[0].problem;
    CHECK(verify_separator(SeparatorSet{BitString::parse("01010101")}, parity, 8).passed());
    CHECK(verify_separator(SeparatorSet{BitString::parse("10101010")}, parity, 8).str() == "fail(1)");
    const auto empty = catalog::separation_problems()[1].problem;
    for (const auto* s : {"00000000", "11111111", "01100101"}) {
        CHECK(verify_separator(SeparatorSet{BitString::parse(s)}, empty, 8).passed());
    }
    CHECK(error_code([&] { verify_separator(SeparatorSet{BitString::parse("0101")}, parity, 8); }) ==
          Errc::separator_undefined);
    const auto opaque = swkl_to_separation(bw_to_swkl(RationalSequence::harmonic()));
    CHECK(error_code([&] { verify_separator(SeparatorSet{BitString::parse("0000")}, opaque, 4); }) ==
          Errc::not_ground_truth);
}

TEST_CASE("verify_branch examples") {
    CHECK(verify_branch({BitString::parse("011010"), 0, std::nullopt}, SigmaTree::full_binary()).passed());
    CHECK(verify_branch({BitString::parse("01"), 50, std::nullopt}, SigmaTree::single_branch(pt("(0)"))).str() ==
          "fail(2)");
}

TEST_CASE("every solver output in the catalogs passes its verifier") {
    for (const auto& [name, family] : catalog::periodic_families()) {
        INFO(name);
        const auto w = build_strongly_cohesive(family, 8, budget(8, 512));
        CHECK(verify_cohesive(w, family, 8).passed());
    }
    for (const auto& c : catalog::ground_truth_trees()) {
        INFO(c.name);
        const auto b = find_branch(c.tree, budget(8));
        CHECK(verify_branch(b, c.tree).passed());
        CHECK(b.bits.size() == 8);
    }
    for (const auto& [name, x] : catalog::bw_sequences()) {
        INFO(name);
        const auto a = find_accumulation_real(x, budget(6));
        CHECK(verify_accumulation(a, x).passed());
    }
}

TEST_CASE("determinism: identical inputs give identical bytes") {
    for (const auto& [name, x] : catalog::periodic_sequences()) {
        CHECK(bytes(extract_slow_cauchy(x, budget(6, 256))) == bytes(extract_slow_cauchy(x, budget(6, 256))));
        CHECK(bytes(find_accumulation_real(x, budget(6))) == bytes(find_accumulation_real(x, budget(6))));
    }
    for (const auto& c : catalog::ground_truth_trees()) {
        CHECK(bytes(find_branch(c.tree, budget(8))) == bytes(find_branch(c.tree, budget(8))));
    }
}
