#include <benchmark/benchmark.h>

#include <numeric>

#include "cuspatlas/lens.hpp"

using namespace cuspatlas;

namespace {

// All fillings of every lens space of order at most range(0).
void BM_FillingStrings(benchmark::State& state) {
  const std::int64_t pmax = state.range(0);
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::int64_t p = 2; p <= pmax; ++p)
      for (std::int64_t q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) total += filling_strings(LensSpace::make(p, q)).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FillingStrings)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_FibonacciWahl(benchmark::State& state) {
  for (auto _ : state)
    for (unsigned j = 5; j <= 15; j += 2) {
      const BigInt f = fib(j), g = fib(j - 2);
      benchmark::DoNotOptimize(wahl_family(LensSpace::make(std::int64_t(f * f), std::int64_t(g * g))));
    }
}
BENCHMARK(BM_FibonacciWahl);

}  // namespace
