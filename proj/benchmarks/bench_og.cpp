#include <benchmark/benchmark.h>

#include "ogcalc/partition.hpp"

static void BM_EnumerateTyped(benchmark::State& state) {
    auto P = ogcalc::GrassParams::even_kn(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto all = ogcalc::enumerate_typed(P);
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_EnumerateTyped)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
