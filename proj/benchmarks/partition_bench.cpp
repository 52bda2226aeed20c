#include <benchmark/benchmark.h>

#include <random>

#include "equlat/partition.hpp"
#include "equlat/partition_enum.hpp"

namespace {

using namespace equlat;

void BM_Join(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Partition a = random_partition(n, rng);
  const Partition b = random_partition(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(join(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Join)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_Meet(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Partition a = random_partition(n, rng);
  const Partition b = random_partition(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(meet(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Meet)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_LeastElementComplement(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Partition a = random_partition(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(least_element_complement(a));
}
BENCHMARK(BM_LeastElementComplement)->Arg(64)->Arg(4096);

void BM_EnumerateAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_partitions(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateAll)->DenseRange(5, 8);

}  // namespace
