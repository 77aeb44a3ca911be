#include <benchmark/benchmark.h>

#include "citegen/baselines.hpp"
#include "citegen/cs_generator.hpp"

namespace {

using namespace citegen;

void BM_GenerateCs(benchmark::State& state) {
  const auto params = CsParams::uniform(5, 5.0, 0.5, 10.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate(params, n, ++seed));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GenerateCs)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Baseline(benchmark::State& state) {
  const auto real = generate(CsParams::uniform(4, 5.0, 0.5, 10.0), static_cast<std::size_t>(state.range(1)), 1);
  const auto kind = static_cast<BaselineKind>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fit_and_generate(kind, real, ++seed));
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Baseline)
    ->ArgsProduct({{0, 1, 2, 3}, {10000, 100000}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
