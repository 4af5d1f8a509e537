#include <benchmark/benchmark.h>

#include "rslab/rng.hpp"
#include "rslab/rs_code.hpp"

using namespace rslab;

namespace {

Word noisy_word(const RSParams& code, std::size_t errors, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Residue> m(code.k());
    for (auto& c : m) c = rng.below(code.field().modulus());
    Word w = rs_encode(code, Poly(code.field(), m));
    for (std::size_t i = 0; i < errors; ++i) w[i] = (w[i] + 1) % code.field().modulus();
    return w;
}

}  // namespace

static void BM_BruteForceList(benchmark::State& state) {
    const std::uint64_t q = state.range(0);
    const RSParams code = RSParams::full(PrimeField(q), 3);
    const Word w = noisy_word(code, q / 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(list_decode_bruteforce(code, w, q - 4));
}
BENCHMARK(BM_BruteForceList)->Arg(7)->Arg(13)->Arg(31);

static void BM_BerlekampWelch(benchmark::State& state) {
    const RSParams code = RSParams::full(PrimeField(state.range(0)), 5);
    const Word w = noisy_word(code, code.unique_radius(), 5);
    for (auto _ : state) benchmark::DoNotOptimize(bw_decode(code, w));
}
BENCHMARK(BM_BerlekampWelch)->Arg(31)->Arg(257);

static void BM_Sudan(benchmark::State& state) {
    const std::uint64_t q = state.range(0);
    const RSParams code = RSParams::full(PrimeField(q), 2);
    const std::size_t radius = q - sudan_agreement_bound(q, 2);
    const Word w = noisy_word(code, radius, 7);
    for (auto _ : state) benchmark::DoNotOptimize(sudan_list_decode(code, w, radius));
}
BENCHMARK(BM_Sudan)->Arg(13)->Arg(31);

BENCHMARK_MAIN();
