#include <benchmark/benchmark.h>

#include "ealab/enumerate.hpp"

namespace {

void BM_EnumerateAll(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    auto all = ealab::enumerate_all(n);
    count = all.size();
    benchmark::DoNotOptimize(all);
  }
  state.counters["classes"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateAll)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto all = ealab::enumerate_all(n);
  for (auto _ : state) benchmark::DoNotOptimize(ealab::census(n, all));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
