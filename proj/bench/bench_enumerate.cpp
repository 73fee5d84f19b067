// Serial reference vs OpenMP kernel on the same family members.
#include <benchmark/benchmark.h>

#include "mmatch/exact.hpp"
#include "mmatch/families.hpp"

namespace {

using namespace mmatch;

const Graph& ladder(int n) {
  static std::vector<Graph> cache(32);
  if (cache[n].order() == 0) cache[n] = generate({FamilyId::ladder}, n);
  return cache[n];
}

void BM_Serial(benchmark::State& state) {
  const auto& g = ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_matching_profile_serial(g));
}

void BM_Parallel(benchmark::State& state) {
  const auto& g = ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_matching_profile_parallel(g));
}

void BM_SerialThornLadder(benchmark::State& state) {
  const auto g = generate({FamilyId::thorn_ladder}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_matching_profile_serial(g));
}

void BM_ParallelThornLadder(benchmark::State& state) {
  const auto g = generate({FamilyId::thorn_ladder}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_matching_profile_parallel(g));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(8, 13, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(8, 13, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SerialThornLadder)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelThornLadder)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
