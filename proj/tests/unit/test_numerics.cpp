#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "bwkit/bwkit.hpp"

using namespace bwkit;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

// Independent value of h(prefix then tail^omega) scaled by 3^|prefix|:
// the tail 1^omega contributes exactly 3^-|prefix|.
BigInt scaled_h(const std::vector<int>& prefix, int tail) {
    BigInt acc = 0;
    for (const int b : prefix) acc = acc * 3 + 2 * b;
    return acc + tail;
}

// Trial-division factorization; the test's own oracle for the coding.
std::optional<std::vector<std::uint64_t>> decode_oracle(std::uint64_t n) {
    if (n == 0) return std::nullopt;
    std::vector<std::uint64_t> exps;
    std::uint64_t p = 2;
    while (n > 1) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
        if (prime) {
            std::uint64_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e == 0) return std::nullopt;
            exps.push_back(e - 1);
        }
        ++p;
    }
    return exps;
}

}  // namespace

TEST_CASE("rationals are reduced and print as p/q") {
    CHECK(q("3/6").str() == "1/2");
    CHECK(q("2").str() == "2/1");
    CHECK(q("-4/8").str() == "-1/2");
    CHECK(q("0/5").str() == "0/1");
    CHECK((q("1/3") + q("1/6")) == q("1/2"));
    CHECK((q("1/3") - q("1/2")).abs() == q("1/6"));
    CHECK((q("2/3") * q("3/4")) == q("1/2"));
    CHECK(Rational::pow2(-3) == q("1/8"));
    CHECK(Rational::pow3(2) == q("9"));
    CHECK(q("1/3") < q("1/2"));
    CHECK(q("1").in_unit_interval());
    CHECK_FALSE(q("5/4").in_unit_interval());
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("0.5"), Error);
}

TEST_CASE("dyadic intervals") {
    const auto a = dyadic_interval(1, 0);
    CHECK(a.left() == q("0"));
    CHECK(a.right() == q("1/2"));
    const auto u = dyadic_interval(0, 0);
    CHECK(u.left() == q("0"));
    CHECK(u.right() == q("1"));
    const auto c = dyadic_interval(2, 2);
    CHECK(c.left() == q("1/2"));
    CHECK(c.right() == q("3/4"));
    CHECK(c.width() == q("1/4"));
    CHECK(c.contains(q("3/4")));
    CHECK_FALSE(c.contains_halfopen(q("3/4")));
    CHECK(c.contains_halfopen(q("1/2")));
    CHECK(DyadicInterval::from_path(BitString::parse("101")) == dyadic_interval(3, 5));
    CHECK(c.child(1) == dyadic_interval(3, 5));
}

TEST_CASE("bit strings") {
    CHECK(BitString::parse("").empty());
    CHECK(BitString::parse("01").is_prefix_of(BitString::parse("0110")));
    CHECK_FALSE(BitString::parse("1").is_prefix_of(BitString::parse("0110")));
    CHECK(BitString::parse("01") < BitString::parse("010"));
    CHECK(BitString::parse("010") < BitString::parse("1"));
    const auto a = BitString::parse("01");
    const auto b = BitString::parse("1");
    const auto c = BitString::parse("10");
    CHECK(a.concat(b).concat(c) == a.concat(b.concat(c)));
    for (std::uint64_t code = 0; code < 200; ++code) CHECK(BitString::from_code(code).code() == code);
    CHECK(BitString::from_code(3).str() == "00");
}

TEST_CASE("Cantor points and distance") {
    const auto p = CantorPoint::parse("0010,(1)");
    CHECK(p.bit(3) == 0);
    CHECK(p.bit(4) == 1);
    CHECK(CantorPoint::parse("1,(01)").str() == "1,(01)");
    CHECK(CantorPoint::parse("1,(01)").take(5).str() == "10101");

    CHECK(cantor_dist(CantorPoint::parse("(0)"), CantorPoint::parse("(0)"), 64).kind == CantorDistance::Kind::zero);
    const auto d01 = cantor_dist(CantorPoint::parse("(0)"), CantorPoint::parse("(1)"), 64);
    CHECK(d01.kind == CantorDistance::Kind::exact);
    CHECK(d01.value() == q("1"));
    const auto d3 = cantor_dist(CantorPoint::parse("(0010)"), CantorPoint::parse("(0011)"), 64);
    CHECK(d3.value() == q("1/8"));
    // Different presentations of the same point.
    CHECK(cantor_dist(CantorPoint::parse("(01)"), CantorPoint::parse("0,(10)"), 64).kind ==
          CantorDistance::Kind::zero);

    const auto rule = CantorPoint::from_rule([](std::uint64_t) -> std::uint8_t { return 0; });
    const auto marker = cantor_dist(rule, CantorPoint::parse("(0)"), 20);
    CHECK(marker.kind == CantorDistance::Kind::agree_up_to_budget);
    CHECK_THROWS_AS(marker.value(), Error);
}

TEST_CASE("embedding examples") {
    CHECK(*embed_exact(CantorPoint::parse("(0)")) == q("0"));
    CHECK(*embed_exact(CantorPoint::parse("(1)")) == q("1"));
    CHECK(*embed_exact(CantorPoint::parse("1,(0)")) == q("2/3"));
    CHECK(*embed_exact(CantorPoint::parse("(01)")) == q("1/4"));
    const auto approx = embed_point(CantorPoint::parse("(1)"), 3);
    CHECK(approx.approx == q("26/27"));
    CHECK(approx.error_bound == q("1/27"));
    CHECK_FALSE(embed_exact(CantorPoint::from_rule([](std::uint64_t) -> std::uint8_t { return 1; })).has_value());

    const auto x = embed_sequence(CantorSequence::listed({}, {CantorPoint::parse("(0)"), CantorPoint::parse("(1)")}));
    for (std::uint64_t i = 0; i < 6; ++i) CHECK(x.term(i) == Rational(static_cast<long>(i % 2)));
    const auto zero = embed_sequence(CantorSequence::listed({}, {CantorPoint::parse("(0)")}));
    CHECK(zero.term(17) == q("0"));
}

TEST_CASE("embedding separation on random eventually periodic pairs") {
    std::mt19937_64 rng(20240611);
    const auto random_bits = [&](std::size_t max_len, bool nonempty) {
        std::uniform_int_distribution<std::size_t> len(nonempty ? 1 : 0, max_len);
        std::vector<std::uint8_t> bits(len(rng));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
        return BitString(bits);
    };
    int checked = 0;
    while (checked < 300) {
        const auto x = CantorPoint::periodic(random_bits(8, false), random_bits(5, true));
        // Make y share a random-length prefix with x so that m varies.
        const auto shared = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
        const auto y = CantorPoint::periodic(x.take(shared).concat(random_bits(6, false)), random_bits(5, true));
        const auto d = cantor_dist(x, y, 256);
        if (d.kind != CantorDistance::Kind::exact) continue;
        const auto m = static_cast<long>(d.exponent);
        const auto gap = distance(*embed_exact(x), *embed_exact(y));
        CHECK(Rational::pow3(-(m + 1)) <= gap);
        CHECK(gap <= Rational::pow3(-m));
        ++checked;
    }
}

TEST_CASE("distance correspondence at the attained bound") {
    // sigma 0 0^omega against sigma 1 1^omega: equal to 3^-(n+1), not below it.
    const auto x = CantorPoint::parse("01,(0)");
    const auto y = CantorPoint::parse("00,(1)");
    const auto d = cantor_dist(x, y, 64);
    CHECK(d.exponent == 1);
    CHECK(distance(*embed_exact(x), *embed_exact(y)) == Rational::pow3(-2));
}

TEST_CASE("embedding matches an independent scaled-integer oracle for length 8") {
    for (unsigned v = 0; v < 256; ++v) {
        std::vector<int> bits;
        std::vector<std::uint8_t> raw;
        for (int i = 7; i >= 0; --i) {
            bits.push_back((v >> i) & 1U);
            raw.push_back(static_cast<std::uint8_t>((v >> i) & 1U));
        }
        for (const int tail : {0, 1}) {
            const auto p = CantorPoint::periodic(BitString(raw), BitString::repeat(static_cast<std::uint8_t>(tail), 1));
            CHECK(*embed_exact(p) == Rational(scaled_h(bits, tail), pow_big(3, 8)));
        }
    }
}

TEST_CASE("h preserves lexicographic order, exhaustive up to length 12") {
    for (std::size_t len = 1; len <= 12; ++len) {
        for (const std::uint8_t tail : {std::uint8_t{0}, std::uint8_t{1}}) {
            Rational previous(-1);
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
                std::vector<std::uint8_t> raw(len);
                for (std::size_t i = 0; i < len; ++i) raw[i] = static_cast<std::uint8_t>((v >> (len - 1 - i)) & 1U);
                const auto h = *embed_exact(CantorPoint::periodic(BitString(raw), BitString::repeat(tail, 1)));
                CHECK(previous < h);
                previous = h;
            }
        }
    }
}

TEST_CASE("sequence coding examples") {
    CHECK(seq_code(std::vector<std::uint64_t>{}).value() == 1);
    CHECK(seq_decode(std::uint64_t{1})->empty());
    CHECK(seq_code(std::vector<std::uint64_t>{0}).value() == 2);
    CHECK(seq_code(std::vector<std::uint64_t>{1, 0}).value() == 12);
    CHECK(seq_code(std::vector<std::uint64_t>{0, 1}).value() == 18);
    CHECK(seq_code(std::vector<std::uint64_t>{0, 1, 2}).value() == 2250);
    CHECK_FALSE(seq_decode(std::uint64_t{5}).has_value());
    CHECK_FALSE(seq_decode(std::uint64_t{0}).has_value());
    CHECK(nth_prime(0) == 2);
    CHECK(nth_prime(9) == 29);
    CHECK(seq_length(2250) == 3);
}

TEST_CASE("sequence coding agrees with a trial-division oracle") {
    // Every sequence with entries < 4 and length < 4.
    const std::uint64_t primes[] = {2, 3, 5};
    for (std::size_t len = 0; len < 4; ++len) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < len; ++i) count *= 4;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::vector<std::uint64_t> s(len);
            std::uint64_t rest = v;
            std::uint64_t expected = 1;
            for (std::size_t i = 0; i < len; ++i) {
                s[i] = rest % 4;
                rest /= 4;
                for (std::uint64_t e = 0; e <= s[i]; ++e) expected *= primes[i];
            }
            const auto code = seq_code(s);
            CHECK(code.value() == expected);
            CHECK(decode_oracle(expected) == s);
            CHECK(seq_decode(code.value()) == s);
        }
    }
    // And every small integer decodes exactly when the oracle says so.
    for (std::uint64_t n = 0; n < 5000; ++n) {
        CHECK(seq_decode(n) == decode_oracle(n));
        CHECK(seq_decode(BigInt(static_cast<unsigned long>(n))) == decode_oracle(n));
    }
}

TEST_CASE("sequence coding grows under extension") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> s(rng() % 5);
        for (auto& v : s) v = rng() % 6;
        auto t = s;
        t.push_back(rng() % 6);
        CHECK(seq_code(s) < seq_code(t));
    }
}
