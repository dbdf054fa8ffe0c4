#include <doctest.h>

#include "layered/infer.hpp"
#include "layered/oracle.hpp"
#include "layered/synth.hpp"
#include "support/test_util.hpp"

using namespace layered;

namespace {

EngineConfig config_for(const GroundPlaneModel& model) {
  EngineConfig config;
  config.disparity_count = model.disparity_count;
  config.horizon_row = model.horizon_row;
  config.ground_slope = model.slope;
  return config;
}

}  // namespace

TEST_CASE("all-zero costs resolve to the all-ground tie-break winner") {
  const GroundPlaneModel model{1.0, 0.5, 8};
  ColumnCosts costs(9, 8);
  costs.set_ground_profile(model);
  const ColumnAssignment a = infer_column(costs, model, config_for(model));
  CHECK(a == ColumnAssignment{1, 1, 1, Label::Vehicle, 0});
}

TEST_CASE("a crafted instance recovers the planted layering at zero energy") {
  const GroundPlaneModel model{1.0, 1.0, 8};
  const int height = 10;
  ColumnCosts costs(height, 8);
  costs.set_ground_profile(model);
  for (float& v : costs.appearance) v = 10.0f;
  costs.appearance_ref(1, Label::Sky) = 0.0f;
  costs.appearance_ref(2, Label::Building) = 0.0f;
  costs.appearance_ref(3, Label::Building) = 0.0f;
  costs.appearance_ref(4, Label::Vehicle) = 0.0f;
  costs.appearance_ref(5, Label::Vehicle) = 0.0f;
  for (int y = 6; y <= height; ++y) costs.appearance_ref(y, Label::Ground) = 0.0f;

  const ColumnAssignment fast = infer_column(costs, model, config_for(model));
  CHECK(fast.ground_top == 6);
  CHECK(fast.object_top == 4);
  CHECK(fast.building_top == 2);
  CHECK(fast.object_label == Label::Vehicle);
  CHECK(fast.building_disparity == 1);  // depth costs tie, smallest level wins
  CHECK(column_energy(costs, fast, model) == 0.0);

  const auto [slow, slow_energy] = brute_force_column_with_energy(costs, model);
  CHECK(slow == fast);
  CHECK(slow_energy == 0.0);
}

TEST_CASE("dynamic program matches exhaustive search on random instances") {
  testutil::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int height = rng.uniform(1, 16);
    const int disparities = rng.uniform(2, 8);
    const GroundPlaneModel model = testutil::grid_model(rng, height, disparities);
    const ColumnCosts costs = testutil::random_column(rng, height, disparities, model);

    ColumnSolver solver;
    const ColumnAssignment fast = solver.solve(costs);
    const auto [slow, slow_energy] = brute_force_column_with_energy(costs, model);

    CHECK(is_feasible(fast, model, height));
    // the scanned minimum, the recovered assignment, and the exhaustive
    // search must all agree exactly under integer costs
    CHECK(solver.best_energy() == slow_energy);
    CHECK(column_energy(costs, fast, model) == slow_energy);
    CHECK(fast == slow);
  }
}

TEST_CASE("intermediate table values never increase as the ground top moves down") {
  testutil::Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int height = rng.uniform(2, 14);
    const int disparities = rng.uniform(2, 8);
    const GroundPlaneModel model = testutil::grid_model(rng, height, disparities);
    const ColumnCosts costs = testutil::random_column(rng, height, disparities, model);
    ColumnSolver solver;
    (void)solver.solve(costs);
    const QTable& table = solver.q_table();
    for (int h1 = 1; h1 < height; ++h1) {
      for (int h2 = 1; h2 <= h1; ++h2) {
        CHECK(table.value_at(h1 + 1, h2) <= table.value_at(h1, h2));
      }
    }
  }
}

TEST_CASE("scene inference") {
  testutil::Rng rng(83);
  const int width = 4, height = 12, disparities = 6;
  const GroundPlaneModel model = testutil::grid_model(rng, height, disparities);
  const EngineConfig config = config_for(model);

  AppearanceCost appearance(width, height);
  for (float& v : appearance.values) v = static_cast<float>(rng.uniform(0, 9));
  CostVolume volume(width, height, disparities);
  for (float& v : volume.costs) v = static_cast<float>(rng.uniform(0, 9));

  const SceneLabeling scene = infer_scene(appearance, volume, model, config);
  REQUIRE(scene.width() == width);

  SUBCASE("per-column results equal infer_column and the exhaustive search") {
    double total = 0.0, oracle_total = 0.0;
    for (int x = 0; x < width; ++x) {
      const ColumnCosts costs = ColumnCosts::from_tensors(appearance, volume, model, x);
      CHECK(scene.columns[static_cast<std::size_t>(x)] == infer_column(costs, model, config));
      total += column_energy(costs, scene.columns[static_cast<std::size_t>(x)], model);
      oracle_total += brute_force_column_with_energy(costs, model).second;
    }
    CHECK(total == oracle_total);
  }

  SUBCASE("permuting input columns permutes the output") {
    AppearanceCost shuffled_app(width, height);
    CostVolume shuffled_vol(width, height, disparities);
    const int permutation[width] = {2, 0, 3, 1};
    for (int x = 0; x < width; ++x) {
      for (int y = 0; y < height; ++y) {
        for (int l = 0; l < kLabelCount; ++l) {
          shuffled_app.at(x, y, static_cast<Label>(l)) =
              appearance.at(permutation[x], y, static_cast<Label>(l));
        }
        for (int d = 0; d < disparities; ++d) {
          shuffled_vol.at(x, y, d) = volume.at(permutation[x], y, d);
        }
      }
    }
    const SceneLabeling shuffled = infer_scene(shuffled_app, shuffled_vol, model, config);
    for (int x = 0; x < width; ++x) {
      CHECK(shuffled.columns[static_cast<std::size_t>(x)] ==
            scene.columns[static_cast<std::size_t>(permutation[x])]);
    }
  }

  SUBCASE("single-column scenes reduce to infer_column") {
    AppearanceCost one_app(1, height);
    CostVolume one_vol(1, height, disparities);
    for (int y = 0; y < height; ++y) {
      for (int l = 0; l < kLabelCount; ++l) {
        one_app.at(0, y, static_cast<Label>(l)) = appearance.at(0, y, static_cast<Label>(l));
      }
      for (int d = 0; d < disparities; ++d) one_vol.at(0, y, d) = volume.at(0, y, d);
    }
    const SceneLabeling one = infer_scene(one_app, one_vol, model, config);
    const ColumnCosts costs = ColumnCosts::from_tensors(one_app, one_vol, model, 0);
    CHECK(one.columns[0] == infer_column(costs, model, config));
  }
}

TEST_CASE("results are identical across thread counts") {
  SynthParams params;
  params.width = 40;
  params.height = 24;
  params.disparity_count = 8;
  params.noise_app = 0.4;
  params.noise_depth = 0.2;
  params.seed = 99;
  params.model = default_ground_model(params.height, params.disparity_count);
  const SynthScene scene = generate(params);

  EngineConfig config = config_for(params.model);
  const AppearanceCost appearance = appearance_from_scores(scene.scores, 1.0);
  const SceneLabeling one = infer_scene(appearance, scene.volume, params.model, config, 1);
  const SceneLabeling many = infer_scene(appearance, scene.volume, params.model, config, 5);
  CHECK(one.columns == many.columns);
}

TEST_CASE("dimension mismatches are rejected") {
  const GroundPlaneModel model{1.0, 0.5, 4};
  const EngineConfig config = config_for(model);
  const AppearanceCost appearance(3, 5);
  const CostVolume volume(4, 5, 4);
  CHECK_THROWS_WITH_AS(infer_scene(appearance, volume, model, config), doctest::Contains("3x5"),
                       std::invalid_argument);
}
