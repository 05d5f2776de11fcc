#include <benchmark/benchmark.h>

#include <cstdint>

#include "bwkit/bwkit.hpp"

using namespace bwkit;

static void BM_FindBranchHarmonic(benchmark::State& state) {
    const auto tree = bw_to_swkl(RationalSequence::harmonic());
    Budget b;
    b.depth = static_cast<std::uint64_t>(state.range(0));
    b.stage = b.depth << b.depth;
    for (auto _ : state) benchmark::DoNotOptimize(find_branch(tree, b));
}
BENCHMARK(BM_FindBranchHarmonic)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BuildStronglyCohesive(benchmark::State& state) {
    const auto x = RationalSequence::periodic({Rational(1), Rational(1)},
                                              {Rational::parse("3/5"), Rational::parse("1/8"), Rational::parse("3/5"),
                                               Rational::parse("7/8"), Rational::parse("1/8")});
    const auto family = bwweak_to_stcoh(x);
    const auto levels = static_cast<std::size_t>(state.range(0));
    Budget b;
    for (auto _ : state) benchmark::DoNotOptimize(build_strongly_cohesive(family, levels, b));
}
BENCHMARK(BM_BuildStronglyCohesive)->Arg(8)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_ExtractAndThin(benchmark::State& state) {
    const auto x = RationalSequence::alternating(Rational::parse("1/4"), Rational::parse("3/4"));
    Budget b;
    for (auto _ : state) {
        const auto slow = extract_slow_cauchy(x, b);
        benchmark::DoNotOptimize(thin_to_fast(slow, x, b));
    }
}
BENCHMARK(BM_ExtractAndThin)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
