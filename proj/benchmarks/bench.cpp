#include "trino/factor.hpp"
#include "trino/mahler.hpp"
#include "trino/roots.hpp"
#include "trino/scan.hpp"

#include <benchmark/benchmark.h>

using namespace trino;

static void BM_Roots(benchmark::State& state) {
    const TrinomialSpec s(static_cast<int>(state.range(0)), 1, 3.0, -1.0);
    for (auto _ : state) benchmark::DoNotOptimize(all_roots(s));
}
BENCHMARK(BM_Roots)->Arg(16)->Arg(64)->Arg(256);

static void BM_Jensen(benchmark::State& state) {
    const TrinomialSpec s(static_cast<int>(state.range(0)), 1, 1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(measure_jensen(s));
}
BENCHMARK(BM_Jensen)->Arg(16)->Arg(64);

static void BM_Series(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_measure(n, 1, 3.0, 1.0));
}
BENCHMARK(BM_Series)->Arg(16)->Arg(64);

static void BM_Factorize(benchmark::State& state) {
    const IntPolynomial p = to_dense(TrinomialSpec(static_cast<int>(state.range(0)), 11, 67.0, 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(factorize(p));
}
BENCHMARK(BM_Factorize)->Arg(14)->Arg(33);

static void BM_Scan(benchmark::State& state) {
    ScanOptions o;
    o.n_max = static_cast<int>(state.range(0));
    o.a_values = {-3, 3};
    o.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(scan_conjecture(o));
}
BENCHMARK(BM_Scan)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
