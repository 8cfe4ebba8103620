#include <benchmark/benchmark.h>

#include "cuspatlas/lattice.hpp"

using namespace cuspatlas;

namespace {

void BM_EnumerateE6(benchmark::State& state) {
  const Cap cap = build_cap(CapRecipe{CapFamily::E6, 0, {}, 0, {}});
  const EnumOptions opt{unsigned(state.range(0)), true};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_embeddings(cap.graph, opt));
}
BENCHMARK(BM_EnumerateE6)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EnumerateAp(benchmark::State& state) {
  const Cap cap = build_cap(CapRecipe::A(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_embeddings(cap.graph));
}
BENCHMARK(BM_EnumerateAp)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_EnumerateWithoutArea(benchmark::State& state) {
  const Cap cap = build_cap(CapRecipe::B(4));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_embeddings(cap.graph, EnumOptions{1, false}));
}
BENCHMARK(BM_EnumerateWithoutArea)->Unit(benchmark::kMillisecond);

}  // namespace
