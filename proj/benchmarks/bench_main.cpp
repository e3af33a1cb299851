#include <benchmark/benchmark.h>

#include "troplin/array_properties.hpp"
#include "troplin/enumeration.hpp"
#include "troplin/fixtures.hpp"
#include "troplin/realization.hpp"

namespace {

void BM_EnumerateRank2Dim3(benchmark::State& state) {
    for (auto _ : state) {
        long long n = troplin::count_permutation_arrays(2, 3);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateRank2Dim3);

void BM_RedundantClosure(benchmark::State& state) {
    const auto p = troplin::billey_vakil_counterexample();
    for (auto _ : state) {
        auto c = troplin::redundant_closure(p.array);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_RedundantClosure);

void BM_CheckP4Closure(benchmark::State& state) {
    const auto closure = troplin::redundant_closure(troplin::fixtures::fig6_left_array());
    for (auto _ : state) {
        auto rep = troplin::check_P4(closure, 2);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CheckP4Closure);

void BM_TropicalMinInterval(benchmark::State& state) {
    const auto mod = troplin::fixtures::interval_fixture();
    const std::vector<troplin::Rat> shifts = {troplin::Rat(0), troplin::Rat(1, 2),
                                              troplin::Rat(0)};
    for (auto _ : state) {
        auto f = troplin::tropical_min(mod.generators, shifts);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_TropicalMinInterval);

}  // namespace

BENCHMARK_MAIN();
