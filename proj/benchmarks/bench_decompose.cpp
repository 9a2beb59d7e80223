#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include <candec/decompose.hpp>
#include <candec/permutation.hpp>

using namespace candec;

namespace {

void BM_BuildSubsystemSchur(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_subsystem(Side::Schur, 3, r));
    }
}
BENCHMARK(BM_BuildSubsystemSchur)->DenseRange(3, 6);

void BM_BuildSubsystemPartition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_subsystem(Side::Partition, n, 3));
    }
}
BENCHMARK(BM_BuildSubsystemPartition)->DenseRange(3, 5);

void BM_InvertUnitriangular(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Subsystem sys = build_subsystem(Side::Schur, 3, r);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_unitriangular(sys.matrix));
    }
}
BENCHMARK(BM_InvertUnitriangular)->DenseRange(3, 6);

void BM_DecomposeRoundTrip(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const auto [X, coefficients] = random_invariant(Side::Schur, 3, r, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(X, Side::Schur));
    }
}
BENCHMARK(BM_DecomposeRoundTrip)->DenseRange(3, 5);

void BM_PatienceOracle(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::mt19937 rng(2024);
    std::vector<int> word(m);
    for (int a = 0; a < m; ++a) word[a] = a + 1;
    std::shuffle(word.begin(), word.end(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(llis_oracle(word));
    }
}
BENCHMARK(BM_PatienceOracle)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
