#include <benchmark/benchmark.h>

#include "layered/cost_volume.hpp"

using namespace layered;

namespace {

GrayImage textured(int width, int height, std::uint32_t salt) {
  GrayImage image(width, height);
  std::uint32_t state = 0x2545f491u ^ salt;
  for (float& v : image.cells) {
    state = state * 1664525u + 1013904223u;
    v = static_cast<float>(state >> 8) / 16777216.0f;
  }
  return image;
}

void BM_BuildCostVolume(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  const int width = 488;
  EngineConfig config;
  config.disparity_count = 64;
  config.patch_size = 11;
  const GrayImage left = textured(width, height, 1);
  const GrayImage right = textured(width, height, 2);
  for (auto _ : state) {
    CostVolume volume = build_cost_volume(left, right, config);
    benchmark::DoNotOptimize(volume.costs.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width) * height *
                          config.disparity_count);
}

void BM_NaiveCostVolume(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  const int width = 64;
  EngineConfig config;
  config.disparity_count = 16;
  config.patch_size = 11;
  const GrayImage left = textured(width, height, 3);
  const GrayImage right = textured(width, height, 4);
  for (auto _ : state) {
    CostVolume volume = naive_cost_volume(left, right, config);
    benchmark::DoNotOptimize(volume.costs.data());
  }
}

}  // namespace

BENCHMARK(BM_BuildCostVolume)->Arg(45)->Arg(90)->Arg(180)->Arg(360)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveCostVolume)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
