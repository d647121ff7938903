// Serial reference vs OpenMP elimination on seeded random sparse systems,
// plus one end-to-end cohomology workload.
#include <benchmark/benchmark.h>

#include "pwforms/elimination.hpp"
#include "pwforms/piecewise.hpp"
#include "pwforms/sampling.hpp"

using namespace pwf;

namespace {

SparseMatrix random_matrix(Index n, int fill_percent) {
    Sampler sampler(42);
    return sampler.matrix(n, n + n / 4, fill_percent);
}

void bench_rank(benchmark::State& state, ExecutionPolicy policy) {
    const Index n = state.range(0);
    SparseMatrix m = random_matrix(n, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m, policy));
    }
}

void bench_kernel(benchmark::State& state, ExecutionPolicy policy) {
    const Index n = state.range(0);
    SparseMatrix m = random_matrix(n, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_basis(m, policy));
    }
}

void bench_sphere_betti(benchmark::State& state, ExecutionPolicy policy) {
    // boundary of the 4-simplex: all 4-element subsets of {0..4}
    auto k = SimplicialComplex::from_top_simplices(
        {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ps_betti(k, static_cast<int>(state.range(0)), -1, policy));
    }
}

} // namespace

BENCHMARK_CAPTURE(bench_rank, serial, ExecutionPolicy::Serial)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_rank, parallel, ExecutionPolicy::Parallel)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_kernel, serial, ExecutionPolicy::Serial)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_kernel, parallel, ExecutionPolicy::Parallel)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_sphere_betti, serial, ExecutionPolicy::Serial)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_sphere_betti, parallel, ExecutionPolicy::Parallel)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
