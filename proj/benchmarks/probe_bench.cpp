#include <benchmark/benchmark.h>

#include "equlat/checks/zoo.hpp"
#include "equlat/clocked.hpp"

namespace {

using namespace equlat;

void BM_HaltingProbe(benchmark::State& state) {
  const TmSpec m = checks::load_machine("loop_right");
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(halting_probe(m, "", bound));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HaltingProbe)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_NonhaltMeet(benchmark::State& state) {
  std::vector<Natural> codes;
  for (const auto& m : checks::load_zoo()) codes.push_back(machine_code(m.spec));
  for (auto _ : state) benchmark::DoNotOptimize(nonhalt_family_meet(static_cast<std::size_t>(state.range(0)), codes));
}
BENCHMARK(BM_NonhaltMeet)->Arg(10)->Arg(100);

}  // namespace
