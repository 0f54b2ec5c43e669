#include <benchmark/benchmark.h>

#include "pgst/classifier.hpp"
#include "pgst/control.hpp"
#include "pgst/evolution.hpp"
#include "pgst/relations.hpp"
#include "pgst/search.hpp"
#include "pgst/spectrum.hpp"

namespace {

void BM_Fidelity(benchmark::State& state) {
    pgst::PathSpectrum spec(static_cast<int>(state.range(0)));
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pgst::fidelity(spec, t));
        t += 0.37;
    }
}
BENCHMARK(BM_Fidelity)->Arg(8)->Arg(64)->Arg(512);

void BM_Amplitude(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    pgst::PathSpectrum spec(n);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pgst::amplitude(spec, 1, n / 2, t));
        t += 0.37;
    }
}
BENCHMARK(BM_Amplitude)->Arg(8)->Arg(64);

void BM_Classify(benchmark::State& state) {
    std::uint64_t n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pgst::classify(n));
        if (++n > 1000000) n = 2;
    }
}
BENCHMARK(BM_Classify);

void BM_OracleExponential(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pgst::oracle_exponential(n, 10.0));
}
BENCHMARK(BM_OracleExponential)->Arg(8)->Arg(32);

void BM_WalkDeterminant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pgst::walk_matrix(n, {1}).determinant);
}
BENCHMARK(BM_WalkDeterminant)->Arg(8)->Arg(16)->Arg(30);

void BM_EarliestTime(benchmark::State& state) {
    pgst::PathSpectrum spec(static_cast<int>(state.range(0)));
    const double step = pgst::default_grid_step(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(pgst::earliest_time(spec, 0.01, 100.0, step));
}
BENCHMARK(BM_EarliestTime)->Arg(3)->Arg(5);

void BM_DependenceWitness(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pgst::dependence_witness(494));
}
BENCHMARK(BM_DependenceWitness);

}  // namespace

BENCHMARK_MAIN();
