#include <benchmark/benchmark.h>

#include "ealab/constructions.hpp"
#include "ealab/states.hpp"

using namespace ealab;

namespace {

void BM_FaithfulStateChainProduct(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto t = direct_product({chain(k), chain(k)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_state(t, StateMode::kFaithful));
  }
  state.counters["elements"] = static_cast<double>(t.size());
}
BENCHMARK(BM_FaithfulStateChainProduct)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SubadditiveState(benchmark::State& state) {
  const auto t = direct_product({chain(3), horizontal_sum({chain(3), chain(3)})});
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_state(t, StateMode::kSubadditive));
  }
}
BENCHMARK(BM_SubadditiveState)->Unit(benchmark::kMillisecond);

}  // namespace
