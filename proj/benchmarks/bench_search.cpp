#include <benchmark/benchmark.h>

#include "rslab/radius.hpp"

using namespace rslab;

static void BM_Lemma1Partial(benchmark::State& state) {
    const Lemma1Options o{static_cast<std::uint64_t>(state.range(0)), static_cast<std::uint64_t>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(lemma1_search(o).triples_scanned);
}
BENCHMARK(BM_Lemma1Partial)->Args({20, 2000})->Args({88, 4000})->Unit(benchmark::kMillisecond);

static void BM_JhExact(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jh_exact_cmp(5000, 40, 2500, 5000));
}
BENCHMARK(BM_JhExact);

static void BM_Ghat(benchmark::State& state) {
    const std::uint64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ghat(n, n / 4, n).ghat);
}
BENCHMARK(BM_Ghat)->Arg(64)->Arg(1024);

BENCHMARK_MAIN();
