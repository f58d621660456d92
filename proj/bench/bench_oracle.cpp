#include <benchmark/benchmark.h>

#include "tinkit/generators.hpp"
#include "tinkit/mwis.hpp"
#include "tinkit/oracle.hpp"
#include "tinkit/tdecomp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tinkit;

namespace {

Graph sample(int n) {
    Rng rng(static_cast<std::uint64_t>(n) * 7919u);
    return random_gnp(n, 0.3, rng);
}

int all_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void BM_ordering_reference(benchmark::State& state) {
    Graph g = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ordering_reference(g, OrderingMeasure::Independence).value);
}

void BM_ordering_dp_serial(benchmark::State& state) {
    Graph g = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ordering_dp(g, OrderingMeasure::Independence, 1).value);
}

void BM_ordering_dp_parallel(benchmark::State& state) {
    Graph g = sample(static_cast<int>(state.range(0)));
    state.counters["threads"] = all_threads();
    for (auto _ : state) benchmark::DoNotOptimize(ordering_dp(g, OrderingMeasure::Independence, 0).value);
}

void mwis_case(benchmark::State& state, int jobs) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(5);
    WeightedInstance inst{random_gnp(n, 0.15, rng), WeightVector(static_cast<std::size_t>(n), make_weight(1))};
    TreeDecomposition td = heuristic_td(inst.graph);
    state.counters["width"] = width(td);
    for (auto _ : state) benchmark::DoNotOptimize(solve(inst, td, jobs).weight);
}

void BM_mwis_serial(benchmark::State& state) { mwis_case(state, 1); }
void BM_mwis_parallel(benchmark::State& state) { mwis_case(state, 0); }

}  // namespace

BENCHMARK(BM_ordering_reference)->DenseRange(7, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ordering_dp_serial)->DenseRange(7, 10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ordering_dp_parallel)->DenseRange(7, 10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mwis_serial)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mwis_parallel)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
