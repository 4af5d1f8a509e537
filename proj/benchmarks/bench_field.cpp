#include <benchmark/benchmark.h>

#include "rslab/ext_field.hpp"
#include "rslab/poly_factor.hpp"

using namespace rslab;

static void BM_ExtMul(benchmark::State& state) {
    const PrimeField F(257);
    const ExtField K = ExtField::make(F, random_irreducible(F, static_cast<int>(state.range(0)), 1));
    ExtElem a = K.alpha(), b = K.alpha() + K.one();
    for (auto _ : state) {
        a = a * b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_ExtMul)->Arg(2)->Arg(4)->Arg(8);

static void BM_ExtMulRaw(benchmark::State& state) {
    const ExtField K = ExtField::make(257, "167,130,1");
    const ExtElem g = first_primitive(K);
    std::vector<Residue> cur{1, 0}, step(g.coeffs().begin(), g.coeffs().end());
    for (auto _ : state) {
        K.mul_raw(cur, step, cur);
        benchmark::DoNotOptimize(cur.data());
    }
}
BENCHMARK(BM_ExtMulRaw);

static void BM_ExtPow(benchmark::State& state) {
    const ExtField K = ExtField::make(257, "167,130,1");
    const ExtElem g = first_primitive(K);
    const BigInt e = K.order() - 1;
    for (auto _ : state) benchmark::DoNotOptimize(g.pow(e));
}
BENCHMARK(BM_ExtPow);

BENCHMARK_MAIN();
