// Microbenchmarks for the hot paths: the direct orientation scan, the
// width-bounded restriction tests it is traded against, and the two
// enumerators that feed every census and verification run.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "orichain/census.hpp"
#include "orichain/orientation.hpp"
#include "orichain/ptrans.hpp"

namespace {

using orichain::PTrans;

const std::vector<PTrans>& full_maps_5() {
  static const std::vector<PTrans> maps =
      orichain::enumerate_all(orichain::Universe::full, 5);
  return maps;
}

const std::vector<PTrans>& partial_maps_4() {
  static const std::vector<PTrans> maps =
      orichain::enumerate_all(orichain::Universe::partial, 4);
  return maps;
}

void BM_Classify(benchmark::State& state) {
  const auto& maps = full_maps_5();
  for (auto _ : state) {
    int cyclic = 0;
    for (const PTrans& alpha : maps) {
      cyclic += orichain::classify(alpha).cyclic ? 1 : 0;
    }
    benchmark::DoNotOptimize(cyclic);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(maps.size()));
}
BENCHMARK(BM_Classify);

void BM_LocalWidthTest(benchmark::State& state) {
  const auto& maps = partial_maps_4();
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int hits = 0;
    for (const PTrans& alpha : maps) {
      hits += orichain::local_width_test(alpha, w) ? 1 : 0;
    }
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(maps.size()));
}
BENCHMARK(BM_LocalWidthTest)->Arg(3)->Arg(4);

void BM_EnumerateFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    orichain::enumerate(orichain::Universe::full, n, [&](const PTrans&) {
      ++count;
      return false;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateFull)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateCycleIsometries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    orichain::enumerate_dpc(n, [&](const PTrans&) {
      ++count;
      return false;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateCycleIsometries)->DenseRange(5, 8);

void BM_VerifyQuadrupleStatement(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orichain::verify_theorem("T-W4-OR", 4));
  }
}
BENCHMARK(BM_VerifyQuadrupleStatement);

}  // namespace

BENCHMARK_MAIN();
