#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "bwkit/bwkit.hpp"

using namespace bwkit;

static void BM_RationalAccumulate(benchmark::State& state) {
    const auto count = static_cast<long>(state.range(0));
    for (auto _ : state) {
        Rational sum;
        for (long k = 1; k <= count; ++k) sum += Rational(BigInt(1), BigInt(k * (k + 1)));
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_RationalAccumulate)->Arg(64)->Arg(512);

static void BM_CantorDist(benchmark::State& state) {
    const auto agree = static_cast<std::size_t>(state.range(0));
    const auto x = CantorPoint::periodic(BitString::repeat(1, agree), BitString::parse("0"));
    const auto y = CantorPoint::periodic(BitString::repeat(1, agree), BitString::parse("1"));
    for (auto _ : state) benchmark::DoNotOptimize(cantor_dist(x, y, 1 << 20));
}
BENCHMARK(BM_CantorDist)->Arg(12)->Arg(1024);

static void BM_EmbedExact(benchmark::State& state) {
    const auto x = CantorPoint::parse("0110100110010110,(011)");
    for (auto _ : state) benchmark::DoNotOptimize(embed_exact(x));
}
BENCHMARK(BM_EmbedExact);

static void BM_SeqCodeRoundTrip(benchmark::State& state) {
    const std::vector<std::uint64_t> s = {3, 1, 4, 1, 5};
    for (auto _ : state) {
        const auto code = seq_code(s);
        benchmark::DoNotOptimize(seq_decode(code.value()));
    }
}
BENCHMARK(BM_SeqCodeRoundTrip);

// f_code searches every valid code below k.
static void BM_FCode(benchmark::State& state) {
    const SeparationInstance p(Predicate::affine(1, 0), Predicate::n_mod({Predicate::constant(true)}));
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f_code(p, 0, 0, k, 1'000'000));
}
BENCHMARK(BM_FCode)->Arg(1000)->Arg(100'000)->Arg(1'000'000);

BENCHMARK_MAIN();
