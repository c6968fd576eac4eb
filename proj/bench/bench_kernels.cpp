// Serial versus OpenMP runs of the three search kernels.

#include <benchmark/benchmark.h>

#include "lrc/construct.hpp"
#include "lrc/geometry.hpp"
#include "lrc/kernels.hpp"

using namespace lrc;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? Exec::parallel : Exec::serial;
}

void BM_MinWeight(benchmark::State& state) {
  // 5^9 codewords
  const Matrix g = sunflower_code(Field::of_order(5), 3).generator();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_weight_blocked(g, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_SmallestDependency(benchmark::State& state) {
  const LinearCode code = sunflower_code(Field::of_order(7), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::smallest_dependency(code.parity_check(), 8, UINT64_MAX, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_FamilySearch(benchmark::State& state) {
  const auto problem = family_problem(*Field::of_order(7), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::search_families(problem, {UINT64_MAX, false}, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_MinWeight)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SmallestDependency)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FamilySearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
