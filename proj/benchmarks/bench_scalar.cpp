#include <benchmark/benchmark.h>
#include <heiscat/scalar.hpp>

using namespace heiscat;

static void BM_ScalarMulReduce(benchmark::State& state) {
    Scalar a = (Scalar::z(3) - Scalar::t(2)) / (Scalar::z() + Scalar::t());
    Scalar b = (Scalar::z() * Scalar::t() + Scalar(1)) / (Scalar::z() - Scalar::t());
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMulReduce);

static void BM_ScalarParse(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(Scalar::from_string("(3*z^2*t - 1/2)/(z - t^3)"));
}
BENCHMARK(BM_ScalarParse);

BENCHMARK_MAIN();
