// Serial reference vs OpenMP enumeration kernel.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "fuzzytop/topology.hpp"

using namespace fuzzytop;

namespace {

void BM_Serial(benchmark::State& state)
{
    const LatticeContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const auto k = static_cast<std::uint64_t>(state.range(2));
    std::uint64_t count = 0;
    for (auto _ : state) {
        count = enumerate_topologies_serial(ctx, k);
        benchmark::DoNotOptimize(count);
    }
    state.counters["topologies"] = static_cast<double>(count);
}

void BM_OpenMP(benchmark::State& state)
{
    const LatticeContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const auto k = static_cast<std::uint64_t>(state.range(2));
    std::uint64_t count = 0;
    for (auto _ : state) {
        count = enumerate_topologies(ctx, k);
        benchmark::DoNotOptimize(count);
    }
    state.counters["topologies"] = static_cast<double>(count);
    state.counters["threads"] = omp_get_max_threads();
}

void BM_Census(benchmark::State& state)
{
    const LatticeContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_all_sizes(ctx));
    }
}

// (n, m, k)
void Cases(benchmark::internal::Benchmark* b)
{
    b->Args({2, 9, 5})->Args({3, 3, 6})->Args({4, 3, 5})->Args({4, 3, 6})->Args({6, 2, 8})->Args({5, 2, 24});
    b->Unit(benchmark::kMillisecond);
}

} // namespace

BENCHMARK(BM_Serial)->Apply(Cases);
BENCHMARK(BM_OpenMP)->Apply(Cases);
BENCHMARK(BM_Census)->Args({4, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
