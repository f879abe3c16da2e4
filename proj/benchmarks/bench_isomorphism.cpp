#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ealab/constructions.hpp"
#include "ealab/isomorphism.hpp"

using namespace ealab;

namespace {

EffectAlgebraTable shuffled(const EffectAlgebraTable& t, std::mt19937& rng) {
  std::vector<Element> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  EffectAlgebraTable out(t.size(), perm[t.one()]);
  for (Element x = 1; x < t.size(); ++x) {
    for (Element y = 1; y < t.size(); ++y) {
      if (auto z = t.sum(x, y)) out.set_cell(perm[x], perm[y], perm[*z]);
    }
  }
  return out;
}

// C3 x (C3 (+) C3), the 12-element running example, and a Boolean cube
// times a chain, which has many automorphisms.
EffectAlgebraTable subject(int which) {
  if (which == 0) {
    return direct_product({chain(3), horizontal_sum({chain(3), chain(3)})});
  }
  return direct_product({chain(2), chain(2), chain(2), chain(3)});
}

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto t = shuffled(subject(static_cast<int>(state.range(0))), rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_AreIsomorphic(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto base = subject(static_cast<int>(state.range(0)));
  const auto a = shuffled(base, rng);
  const auto b = shuffled(base, rng);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_AreIsomorphic)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
