#include <benchmark/benchmark.h>

#include "cyclicia/schemes.hpp"
#include "cyclicia/search.hpp"
#include "cyclicia/separability.hpp"

using namespace cyclicia;

namespace {

ShiftMatrix worked_channel() {
    return ShiftMatrix::from_exponents({{0, 4, 2}, {4, 0, 2}, {1, 1, 0}}, RingSize(5));
}

ParamVector worked_params() {
    return ParamVector::from_exponents({{0, 2, 1}, {2, 0, 0}, {4, 3, 2}}, RingSize(5));
}

}  // namespace

static void BM_SearchChannel(benchmark::State& state) {
    const ShiftMatrix D = worked_channel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_channel(D));
    }
}
BENCHMARK(BM_SearchChannel);

static void BM_ProveInfeasibility(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prove_infeasibility(RingSize(5), jobs));
    }
}
BENCHMARK(BM_ProveInfeasibility)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CheckAll(benchmark::State& state) {
    const ShiftMatrix D = worked_channel();
    const ParamVector p = worked_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_all(D, p));
    }
}
BENCHMARK(BM_CheckAll);

static void BM_SolveParameters(benchmark::State& state) {
    const ShiftMatrix D = worked_channel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_parameters(D, {1, 2, 3}, 0));
    }
}
BENCHMARK(BM_SolveParameters);
