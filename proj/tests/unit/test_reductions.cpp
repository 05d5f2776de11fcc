#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "doctest.h"

#include "bwkit/bwkit.hpp"
#include "catalog.hpp"

using namespace bwkit;
using catalog::pt;
using catalog::q;

namespace {

// Closed cell of sigma computed on the test side.
bool in_cell(const Rational& x, const BitString& sigma) {
    Rational left(0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i]) left += Rational::pow2(-static_cast<long>(i) - 1);
    }
    return left <= x && x <= left + Rational::pow2(-static_cast<long>(sigma.size()));
}

std::uint64_t witnesses(const RationalSequence& x, const BitString& sigma, std::uint64_t stage) {
    std::uint64_t count = 0;
    for (std::uint64_t j = 0; j <= stage; ++j) count += in_cell(x.term(j), sigma) ? 1 : 0;
    return count;
}

BitString bits_of(std::uint64_t value, std::size_t length) {
    std::vector<std::uint8_t> out(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1U);
    return BitString(out);
}

// Trial-division decode, independent of the library.
std::optional<std::vector<std::uint64_t>> decode(std::uint64_t n) {
    if (n == 0) return std::nullopt;
    std::vector<std::uint64_t> out;
    std::uint64_t p = 2;
    while (n > 1) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (prime) {
            std::uint64_t e = 0;
            for (; n % p == 0; n /= p) ++e;
            if (e == 0) return std::nullopt;
            out.push_back(e - 1);
        }
        ++p;
    }
    return out;
}

SeparationInstance one_sided(const Predicate& b) { return SeparationInstance(b, Predicate::constant(false)); }

constexpr std::uint64_t kBudget = 1'000'000;

}  // namespace

TEST_CASE("bw_to_swkl examples") {
    const auto zero = bw_to_swkl(RationalSequence::constant(0));
    for (std::size_t d = 1; d <= 8; ++d) CHECK(zero.member_at_stage(BitString::repeat(0, d), d));

    const auto third = bw_to_swkl(RationalSequence::constant(q("1/3")));
    CHECK(third.member_at_stage(BitString::parse("01"), 2));
    for (std::size_t d = 1; d <= 8; ++d) {
        bool some = false;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
            const auto sigma = bits_of(v, d);
            if (in_cell(q("1/3"), sigma)) some = some || third.member_at_stage(sigma, 4 * d);
        }
        CHECK(some);
    }

    const auto alt = bw_to_swkl(RationalSequence::alternating(0, 1));
    for (std::size_t d = 1; d <= 8; ++d) {
        CHECK(alt.member_at_stage(BitString::repeat(0, d), 2 * d));
        CHECK(alt.member_at_stage(BitString::repeat(1, d), 2 * d));
        CHECK_FALSE(alt.member_at_stage(BitString::repeat(1, d), 2 * d - 2));
    }
}

TEST_CASE("bw_to_swkl soundness: pigeonhole stage and witness recount") {
    for (const auto& [name, x] : catalog::bw_sequences()) {
        INFO(name);
        const auto tree = bw_to_swkl(x);
        for (std::size_t d = 1; d <= 8; ++d) {
            const std::uint64_t stage = d << d;
            const auto member = tree.member_oracle(stage);
            bool some = false;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << d) && !some; ++v) some = member(bits_of(v, d));
            CHECK(some);
        }
        for (const std::size_t d : {3, 6}) {
            const std::uint64_t stage = d << d;
            const auto member = tree.member_oracle(stage);
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
                const auto sigma = bits_of(v, d);
                CHECK(member(sigma) == (witnesses(x, sigma, stage) >= d));
            }
        }
    }
}

TEST_CASE("branch_to_point examples") {
    const auto p0 = branch_to_point(RationalSequence::constant(0), BitString::repeat(0, 5), 10);
    CHECK(p0.approx == q("0"));
    CHECK(p0.error == q("1/32"));
    CHECK(p0.selector == Selector({0, 1, 2, 3}));

    const auto third = RationalSequence::constant(q("1/3"));
    const auto p1 = branch_to_point(third, BitString::parse("0101"), 10);
    CHECK(p1.approx == q("5/16"));
    CHECK(p1.error == q("1/16"));
    CHECK(distance(q("1/3"), p1.approx) <= p1.error);

    const auto p2 = branch_to_point(RationalSequence::alternating(0, 1), BitString::parse("1111"), 10);
    CHECK(p2.approx == q("15/16"));
    CHECK(p2.selector == Selector({1, 3, 5}));

    try {
        branch_to_point(RationalSequence::constant(0), BitString::parse("1"), 10);
        FAIL("expected not-a-node");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_a_node);
    }
    CHECK_THROWS_AS(branch_to_point(RationalSequence::constant(0), BitString::repeat(0, 6), 3), Error);
}

TEST_CASE("branches of bw_to_swkl give fast certificates") {
    for (const auto& [name, x] : catalog::bw_sequences()) {
        INFO(name);
        Budget b;
        b.depth = 8;
        b.stage = 8 << 8;
        const auto branch = find_branch(bw_to_swkl(x), b);
        REQUIRE(branch.bits.size() == 8);
        const auto point = branch_to_point(x, branch.bits, branch.verified_at_stage);
        const auto cert = fast_certificate(point);
        CHECK(verify_cauchy(cert, x).passed());
        // Independent: consecutive selected terms share the cell of the
        // longer prefix, so |x_f(v) - x_f(w)| <= 2^-(min(v,w)+1).
        for (std::size_t v = 0; v < point.selector.size(); ++v) {
            for (std::size_t w = v + 1; w < point.selector.size(); ++w) {
                CHECK(distance(x.term(point.selector[v]), x.term(point.selector[w])) <=
                      Rational::pow2(-static_cast<long>(v) - 1));
            }
        }
    }
}

TEST_CASE("pairing") {
    for (std::uint64_t a = 0; a < 30; ++a) {
        for (std::uint64_t b = 0; b < 30; ++b) CHECK(unpair(pair(a, b)) == std::make_pair(a, b));
    }
    for (std::uint64_t z = 0; z < 500; ++z) CHECK(pair(unpair(z).first, unpair(z).second) == z);
    CHECK(pair(0, 1) == 2);
}

TEST_CASE("swkl_to_separation examples") {
    const auto full = swkl_to_separation(SigmaTree::full_binary());
    for (std::uint64_t n = 0; n < 31; ++n) {
        CHECK(full.in_set(0, n) == false);
        CHECK(full.in_set(1, n) == false);
    }
    const auto zero = swkl_to_separation(SigmaTree::single_branch(pt("(0)")));
    CHECK(zero.in_set(1, 0) == true);
    CHECK(zero.in_set(0, 0) == false);
    const auto ten = swkl_to_separation(SigmaTree::single_branch(pt("1,(0)")));
    CHECK(ten.in_set(0, 0) == true);
    CHECK(ten.in_set(1, 0) == false);

    // The normal form itself: on the 0-branch, x = <1, s0> with s0 >= 1 has
    // no witness y for B_1 at the root, while the full tree answers y = 0.
    for (std::uint64_t s0 = 1; s0 < 5; ++s0) {
        for (std::uint64_t y = 0; y < 50; ++y) CHECK_FALSE(zero.b(1).eval(pair(1, s0), y, 0));
    }
    for (std::uint64_t x = 0; x < 20; ++x) CHECK(full.b(0).eval(x, 0, 0));
}

TEST_CASE("separator_to_branch examples") {
    const auto zero = SigmaTree::single_branch(pt("(0)"));
    CHECK(separator_to_branch(SeparatorSet{BitString::repeat(0, 255)}, zero, 8, 8).bits == BitString::repeat(0, 8));
    CHECK(separator_to_branch(SeparatorSet{BitString::repeat(1, 255)}, SigmaTree::full_binary(), 8, 8).bits ==
          BitString::repeat(1, 8));
    auto root_only = BitString::repeat(0, 255);
    std::vector<std::uint8_t> raw = root_only.bits();
    raw[0] = 1;
    CHECK(separator_to_branch(SeparatorSet{BitString(raw)}, SigmaTree::single_branch(pt("1,(0)")), 8, 8).bits ==
          BitString::parse("10000000"));
    try {
        separator_to_branch(SeparatorSet{BitString::repeat(0, 3)}, zero, 8, 8);
        FAIL("expected S-undefined");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::separator_undefined);
    }
}

TEST_CASE("exact separators give extendible branches") {
    for (const auto& c : catalog::ground_truth_trees()) {
        INFO(c.name);
        const auto s = exact_separator(c.tree, 8);
        REQUIRE(s.has_value());
        CHECK(verify_separator(*s, swkl_to_separation(c.tree), s->defined_below()).passed());
        const auto b = separator_to_branch(*s, c.tree, 8, 1 << 12);
        REQUIRE(b.bits.size() == 8);
        for (std::size_t len = 0; len <= 8; ++len) CHECK(c.extendible(b.bits.prefix(len), 8));
    }
    CHECK_FALSE(exact_separator(bw_to_swkl(RationalSequence::harmonic()), 4).has_value());
}

TEST_CASE("f_code examples") {
    const auto p = one_sided(Predicate::affine(1, 0));
    CHECK(f_code(p, 0, 0, 3, kBudget).value() == 2);
    CHECK(f_code(p, 0, 0, 19, kBudget).value() == 18);
    CHECK(g_len(p, 0, 0, 19, kBudget) == 2);
    CHECK(f_code(p, 0, 0, 0, kBudget).value() == 1);
    CHECK(f_code(p, 0, 0, 1, kBudget).value() == 1);
    const auto never = one_sided(Predicate::constant(false));
    for (std::uint64_t k = 0; k < 200; ++k) CHECK(g_len(never, 0, 5, k, kBudget) == 0);
    try {
        f_code(p, 0, 0, 101, 100);
        FAIL("expected budget-exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::budget_exceeded);
    }
}

TEST_CASE("valid codes are exactly the course-of-values codes, k <= 2000") {
    for (const auto& c : catalog::choice_functions()) {
        INFO(c.name);
        const auto p = one_sided(c.b);
        const auto unique = make_unique_minimal(c.b);
        // Brute force: a code is valid when it decodes and every position
        // holds the unique witness.
        std::set<std::uint64_t> valid;
        for (std::uint64_t s = 1; s < 2000; ++s) {
            const auto v = decode(s);
            if (!v) continue;
            bool ok = true;
            for (std::size_t x = 0; x < v->size() && ok; ++x) ok = unique.eval(x, (*v)[x], 0);
            if (ok) valid.insert(s);
        }
        // Course-of-values codes of the choice function.
        std::set<std::uint64_t> course;
        std::vector<std::uint64_t> prefix;
        for (std::uint64_t m = 0;; ++m) {
            const auto code = seq_code(prefix).value();
            if (code >= 2000) break;
            course.insert(code.get_ui());
            prefix.push_back(c.choice(m));
        }
        CHECK(valid == course);

        std::uint64_t best = 1;
        std::uint64_t prev_len = 0;
        for (std::uint64_t k = 0; k <= 2000; ++k) {
            if (k > 0 && valid.contains(k - 1)) best = k - 1;
            const auto f = f_code(p, 0, 0, k, kBudget).value();
            CHECK(f == best);
            const auto g = g_len(p, 0, 0, k, kBudget);
            CHECK(g >= prev_len);
            prev_len = g;
        }
    }
}

TEST_CASE("h_bit examples and the tie rule") {
    const auto left = SeparationInstance(Predicate::affine(1, 0), Predicate::constant(false));
    for (std::uint64_t k = 2; k < 60; ++k) CHECK(h_bit(left, k, 3, kBudget) == 0);
    const auto right = SeparationInstance(Predicate::constant(false), Predicate::affine(1, 0));
    for (std::uint64_t k = 3; k < 60; ++k) CHECK(h_bit(right, k, 3, kBudget) == 1);
    CHECK(h_bit(right, 0, 3, kBudget) == 0);
    for (const auto& c : catalog::separation_problems()) {
        for (std::uint64_t n = 0; n < 6; ++n) {
            for (std::uint64_t k = 0; k < 300; k += 7) {
                const auto g0 = g_len(c.problem, 0, n, k, kBudget);
                const auto g1 = g_len(c.problem, 1, n, k, kBudget);
                CHECK(h_bit(c.problem, k, n, kBudget) == (g0 >= g1 ? 0 : 1));
            }
        }
    }
}

TEST_CASE("separation_to_bw examples") {
    const auto empty_s = SeparationInstance(Predicate::affine(1, 0), Predicate::constant(false));
    const auto x = separation_to_bw(empty_s, 20000);
    for (std::uint64_t k = 2; k < 12; ++k) CHECK(x.term(k) == q("0"));

    const auto full_s = SeparationInstance(Predicate::constant(false), Predicate::affine(1, 0));
    const auto y = separation_to_bw(full_s, 20000);
    const auto pts = y.cantor_points();
    REQUIRE(pts != nullptr);
    for (std::uint64_t k = 3; k < 12; ++k) CHECK(pts->point(k).take(16) == BitString::repeat(1, 16));

    const auto parity = catalog::separation_problems()[0].problem;
    const auto z = separation_to_bw(parity, 20000);
    CHECK(z.cantor_points()->point(200).take(8).str() == "01010101");
}

TEST_CASE("point_to_separator examples") {
    CHECK(point_to_separator(BitString::parse("0000")).bits.str() == "0000");
    const auto all = point_to_separator(BitString::parse("1111"));
    for (std::uint64_t n = 0; n < 4; ++n) CHECK(all.contains(n));
    const auto odd = point_to_separator(BitString::parse("0101"));
    CHECK_FALSE(odd.contains(0));
    CHECK(odd.contains(1));
    CHECK(odd.contains(3));
    CHECK_THROWS_AS(odd.contains(4), Error);
}

TEST_CASE("bwweak_to_stcoh examples") {
    const auto literal_alt = bwweak_to_stcoh(RationalSequence::alternating(0, 1), Convention::paper_literal);
    for (std::uint64_t i = 0; i < 12; ++i) {
        for (std::uint64_t j = 0; j < 12; ++j) CHECK(literal_alt.member(i, j));
    }
    // Corrected rows of alternating(0, 1): 0 scales to 0, in every row; 1
    // scales to 1/2 and floor(2^(i-1)) is odd only for i = 1.
    const auto corrected_alt = bwweak_to_stcoh(RationalSequence::alternating(0, 1));
    for (std::uint64_t j = 0; j < 8; ++j) {
        CHECK(corrected_alt.member(0, j));
        CHECK(corrected_alt.member(1, j) == (j % 2 == 0));
        CHECK(corrected_alt.member(2, j));
    }
    CHECK(cell_parity_member(q("1/3"), 2, Convention::corrected));
    CHECK_FALSE(cell_parity_member(q("1/3"), 2, Convention::paper_literal));
    CHECK(cell_parity_member(q("1/4"), 2, Convention::paper_literal));
}

TEST_CASE("subsequence_from_cohesive examples") {
    const auto alt = RationalSequence::alternating(0, 1);
    const auto evens = subsequence_from_cohesive(Selector({0, 2, 4, 6, 8}), alt);
    CauchyCertificate even_cert{evens, {{0, 0}, {1, 0}, {5, 0}}, Rate::slow, std::nullopt};
    CHECK(verify_cauchy(even_cert, alt).passed());
    CauchyCertificate ident{Selector::identity(10), {{1, 0}}, Rate::slow, std::nullopt};
    const auto r = verify_cauchy(ident, alt);
    REQUIRE_FALSE(r.passed());
    CHECK(r.violation->n == 1);
    const auto constant = RationalSequence::constant(q("2/5"));
    CauchyCertificate any{Selector({3, 7, 20}), {{0, 0}, {10, 0}}, Rate::slow, std::nullopt};
    CHECK(verify_cauchy(any, constant).passed());
}

TEST_CASE("paper-literal rows: identity is strongly cohesive yet not Cauchy") {
    const auto alt = RationalSequence::alternating(0, 1);
    const auto family = bwweak_to_stcoh(alt, Convention::paper_literal);
    const std::size_t levels = 10;
    CohesiveWitness w{Selector::identity(64), {}, std::nullopt};
    for (std::uint64_t i = 0; i < levels; ++i) w.settle.push_back({i, 0, Side::in});
    CHECK(verify_cohesive(w, family, levels).passed());
    CauchyCertificate cert{subsequence_from_cohesive(w.selector, alt), {{1, 0}}, Rate::slow, std::nullopt};
    const auto r = verify_cauchy(cert, alt);
    REQUIRE_FALSE(r.passed());
    CHECK(r.violation->n == 1);
    CHECK(r.str() == "fail(1, 0, 1)");
}

TEST_CASE("stcoh_to_bwweak examples") {
    const auto all = stcoh_to_bwweak(SetFamily::periodic_rows({}, pt("(1)")));
    for (std::uint64_t i = 0; i < 6; ++i) CHECK(all.term(i) == q("1"));

    const auto r0 = SetFamily::periodic_rows({pt("(10)")}, pt("(1)"));
    const auto x0 = stcoh_to_bwweak(r0);
    CHECK(x0.term(0) == q("1"));
    CHECK(x0.term(1) == q("1/3"));
    CohesiveWitness evens{Selector({0, 2, 4, 6}), {{0, 0, Side::in}}, std::nullopt};
    CHECK(verify_cohesive(evens, r0).passed());

    const auto alt_rows = SetFamily::periodic_rows({}, pt("(10)"));
    const auto x1 = stcoh_to_bwweak(alt_rows);
    CHECK(x1.term(0) == q("1"));
    CHECK(x1.term(1) == q("0"));
    for (const std::uint64_t parity : {0, 1}) {
        CohesiveWitness w{Selector({parity, parity + 2, parity + 4}), {}, std::nullopt};
        for (std::uint64_t i = 0; i < 8; ++i) w.settle.push_back({i, 0, parity == 0 ? Side::in : Side::out});
        CHECK(verify_cohesive(w, alt_rows, 8).passed());
    }
    CohesiveWitness mixed{Selector({0, 1, 2}), {{0, 0, Side::in}}, std::nullopt};
    CHECK_FALSE(verify_cohesive(mixed, alt_rows).passed());
}

TEST_CASE("modulus for levels and cohesive back-translation") {
    CHECK(modulus_for_levels(0) == 0);
    CHECK(modulus_for_levels(1) == 2);
    CHECK(modulus_for_levels(8) == 13);
    for (std::size_t levels = 1; levels < 20; ++levels) {
        const auto n = modulus_for_levels(levels);
        CHECK(pow_big(2, n) >= pow_big(3, levels));
        CHECK(pow_big(2, n - 1) < pow_big(3, levels));
    }
    for (const auto& [name, family] : catalog::periodic_families()) {
        INFO(name);
        const auto x = stcoh_to_bwweak(family);
        Budget b;
        b.depth = modulus_for_levels(8);
        const auto cert = extract_slow_cauchy(x, b);
        REQUIRE(verify_cauchy(cert, x).passed());
        const auto w = cohesive_from_cauchy(cert, family, 8);
        CHECK(verify_cohesive(w, family, 8).passed());
    }
    CauchyCertificate weak{Selector({0, 1}), {{2, 0}}, Rate::slow, std::nullopt};
    CHECK_THROWS_AS(cohesive_from_cauchy(weak, SetFamily::periodic_rows({}, pt("(1)")), 8), Error);
}
