#include <benchmark/benchmark.h>

#include "rslab/poly_factor.hpp"
#include "rslab/products.hpp"

using namespace rslab;

static void BM_NkDense(benchmark::State& state) {
    const PrimeField F(state.range(0));
    const ExtField K = ExtField::make(F, random_irreducible(F, 2, 1));
    const std::size_t k = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(nk_count_dense(K, k).min());
}
BENCHMARK(BM_NkDense)->Args({31, 4})->Args({101, 6})->Args({257, 12})->Unit(benchmark::kMillisecond);

static void BM_GroupOrder(benchmark::State& state) {
    const ExtField K = ExtField::make(101, "2,0,1");
    const auto method = state.range(0) ? GroupOrderMethod::DlogGcd : GroupOrderMethod::Closure;
    const std::vector<Residue> S{0, 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(group_order(K, S, method).order);
}
BENCHMARK(BM_GroupOrder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
