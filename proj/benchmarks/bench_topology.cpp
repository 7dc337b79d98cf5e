#include <benchmark/benchmark.h>

#include "settop/hyperspace.hpp"
#include "settop/topology.hpp"

using namespace settop;

namespace {

PointTopology discrete(int n) {
  std::vector<PointSet> family;
  for (std::uint32_t m = 1; m < (1u << n); ++m) family.emplace_back(n, m);
  return PointTopology(n, family);
}

}  // namespace

static void BM_EnumerateTopologies4(benchmark::State& state) {
  for (auto _ : state) {
    auto all = enumerate_topologies(4);
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(BM_EnumerateTopologies4);

static void BM_ExpOfDiscrete4(benchmark::State& state) {
  const PointTopology base = discrete(4);
  for (auto _ : state) {
    auto h = exp_space(base, KBound::unbounded());
    benchmark::DoNotOptimize(h.topology.closed_count());
  }
}
BENCHMARK(BM_ExpOfDiscrete4);

static void BM_SeparationProfileLargeExp(benchmark::State& state) {
  const HyperSpace h = exp_space(discrete(4), KBound::unbounded());
  for (auto _ : state) {
    auto p = separation_profile(h.topology);
    benchmark::DoNotOptimize(p.t4);
  }
}
BENCHMARK(BM_SeparationProfileLargeExp);
