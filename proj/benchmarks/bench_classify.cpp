#include <benchmark/benchmark.h>

#include "cuspatlas/obstruct.hpp"

using namespace cuspatlas;

namespace {

void BM_ClassifyDegree(benchmark::State& state) {
  const int d = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_degree(d));
}
BENCHMARK(BM_ClassifyDegree)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EnumerateCombos(benchmark::State& state) {
  const int d = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_combos(d));
}
BENCHMARK(BM_EnumerateCombos)->DenseRange(5, 9)->Unit(benchmark::kMicrosecond);

}  // namespace
