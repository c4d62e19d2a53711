// Serial reference vs OpenMP batch kernel over many 8x8 (and 16x16) blocks.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "orthogen/presets.hpp"
#include "orthogen/transform.hpp"

namespace {

using orthogen::Direction;

struct Fixture {
  orthogen::OrthoMatrix m;
  std::vector<double> in, out;

  Fixture(std::size_t n, std::size_t blocks)
      : m(orthogen::assembleMatrix(orthogen::presetValues({orthogen::Preset::Dct, n}))), in(blocks * n * n),
        out(in.size()) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(0, 1023);
    for (double& v : in) v = d(rng);
  }
};

template <bool Parallel>
void BM_Forward(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      orthogen::transformBatch(f.m.entries, f.in, f.out, Direction::Forward);
    } else {
      orthogen::transformBatchSerial(f.m.entries, f.in, f.out, Direction::Forward);
    }
    benchmark::DoNotOptimize(f.out.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Forward, false)->Args({8, 4096})->Args({8, 65536})->Args({16, 16384})->UseRealTime();
BENCHMARK_TEMPLATE(BM_Forward, true)->Args({8, 4096})->Args({8, 65536})->Args({16, 16384})->UseRealTime();

BENCHMARK_MAIN();
