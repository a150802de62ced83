// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "adjrep/adjoint.hpp"
#include "adjrep/forests.hpp"
#include "adjrep/reference.hpp"

using namespace adjrep;

namespace {

PartialTransformation chain_with_leaves(int n)
{
  std::vector<int> parent(static_cast<std::size_t>(n), LoopAugmentedForest::kRoot);
  for (int v = 1; v < n; ++v)
    parent[static_cast<std::size_t>(v)] = v < 3 ? v - 1 : 2;
  return LoopAugmentedForest(parent).to_partial_transformation();
}

void BM_EnumerateForestsSerial(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::enumerate_forests(static_cast<int>(state.range(0)), true));
}

void BM_EnumerateForestsParallel(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_forests(static_cast<int>(state.range(0)), true));
}

void BM_OrbitSerial(benchmark::State& state)
{
  auto f = chain_with_leaves(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::brute_force_character(f));
}

void BM_OrbitParallel(benchmark::State& state)
{
  auto f = chain_with_leaves(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_character(f));
}

void BM_VerifySerial(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::verify(static_cast<int>(state.range(0))));
}

void BM_VerifyParallel(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(verify(static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_EnumerateForestsSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateForestsParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
