#include <benchmark/benchmark.h>

#include "polystab/decide.hpp"
#include "polystab/moduli.hpp"

using namespace polystab;

namespace {

Regime reference_regime() { return select_regime(3, PR::parse("3"), PR::parse("3/2"), PR::parse("5/2")); }

void BM_EnumerateReference(benchmark::State& state) {
  Regime reg = reference_regime();
  auto bounds = default_bounds(reg);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_configurations(reg, bounds, int(state.range(0))));
}
BENCHMARK(BM_EnumerateReference)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateLowDegree(benchmark::State& state) {
  RegimeKnobs k;
  k.area_closure = false;
  k.d = int(state.range(0));
  Regime reg = select_regime(3, PR::parse("3"), PR::parse("3/2"), PR::parse("5/2"), k);
  auto bounds = default_bounds(reg);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_configurations(reg, bounds, 1));
}
BENCHMARK(BM_EnumerateLowDegree)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Unpruned(benchmark::State& state) {
  RegimeKnobs k;
  k.area_closure = false;
  Regime reg = select_regime(3, PR::parse("5/2"), PR::parse("3/2"), PR::parse("2"), k);
  auto bounds = default_bounds(reg);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_unpruned(reg, bounds));
}
BENCHMARK(BM_Unpruned)->Unit(benchmark::kMillisecond);

void BM_DecideStabilized(benchmark::State& state) {
  PR x = PR::parse("7/4"), a = PR::parse("3/2"), b = PR::parse("13/8");
  for (auto _ : state) benchmark::DoNotOptimize(decide_stabilized(x, a, b, 3));
}
BENCHMARK(BM_DecideStabilized);

}  // namespace

BENCHMARK_MAIN();
