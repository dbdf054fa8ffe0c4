#include <benchmark/benchmark.h>

#include "layered/infer.hpp"
#include "layered/synth.hpp"

using namespace layered;

namespace {

struct Instance {
  SynthScene scene;
  AppearanceCost appearance;
  GroundPlaneModel model;
  EngineConfig config;
};

Instance make_instance(int width, int height, int disparities) {
  SynthParams params;
  params.width = width;
  params.height = height;
  params.disparity_count = disparities;
  params.noise_app = 0.05;
  params.noise_depth = 0.05;
  params.seed = 7;
  params.model = default_ground_model(height, disparities);

  Instance instance;
  instance.scene = generate(params);
  instance.model = params.model;
  instance.config.disparity_count = disparities;
  instance.config.horizon_row = params.model.horizon_row;
  instance.config.ground_slope = params.model.slope;
  instance.appearance = appearance_from_scores(instance.scene.scores, 1.0);
  return instance;
}

void BM_InferColumn(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  const Instance instance = make_instance(8, height, 64);
  ColumnCosts costs =
      ColumnCosts::from_tensors(instance.appearance, instance.scene.volume, instance.model, 0);
  ColumnSolver solver;
  for (auto _ : state) {
    ColumnAssignment a = solver.solve(costs);
    benchmark::DoNotOptimize(a);
  }
}

void BM_InferScene(benchmark::State& state) {
  const int height = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  const Instance instance = make_instance(488, height, 64);
  for (auto _ : state) {
    SceneLabeling scene = infer_scene(instance.appearance, instance.scene.volume, instance.model,
                                      instance.config, threads);
    benchmark::DoNotOptimize(scene.columns.data());
  }
}

}  // namespace

BENCHMARK(BM_InferColumn)->Arg(45)->Arg(90)->Arg(180)->Arg(360)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_InferScene)
    ->Args({180, 1})
    ->Args({180, 4})
    ->Args({360, 1})
    ->Args({360, 4})
    ->Unit(benchmark::kMillisecond);
