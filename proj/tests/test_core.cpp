#include <doctest.h>

#include "layered/config.hpp"
#include "layered/types.hpp"
#include "support/test_util.hpp"

using namespace layered;

TEST_CASE("label codes are stable") {
  CHECK(static_cast<int>(Label::Ground) == 0);
  CHECK(static_cast<int>(Label::Vehicle) == 1);
  CHECK(static_cast<int>(Label::Pedestrian) == 2);
  CHECK(static_cast<int>(Label::Building) == 3);
  CHECK(static_cast<int>(Label::Sky) == 4);
  CHECK(std::string(label_name(Label::Pedestrian)) == "Pedestrian");
}

TEST_CASE("ground disparity follows the clamped linear model") {
  const GroundPlaneModel model{10.0, 0.5, 64};
  CHECK(model.ground_disparity(10) == 0);  // at the horizon
  CHECK(model.ground_disparity(5) == 0);   // above it clamps to zero
  CHECK(model.ground_disparity(30) == 10); // round(0.5 * 20)

  // round-half-up on the .5 boundary: 0.5 * 21 - 0.5 * 20 ... row 31 gives 10.5
  CHECK(model.ground_disparity(31) == 11);
}

TEST_CASE("ground disparity is non-decreasing and saturates at the top level") {
  testutil::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int height = rng.uniform(1, 40);
    const int disparities = rng.uniform(2, 32);
    const GroundPlaneModel model = testutil::grid_model(rng, height, disparities);
    int previous = 0;
    for (int y = 1; y <= height; ++y) {
      const int d = model.ground_disparity(y);
      CHECK(d >= 0);
      CHECK(d < disparities);
      CHECK(d >= previous);
      if (y <= model.horizon_row) CHECK(d == 0);
      previous = d;
    }
  }
}

TEST_CASE("render_maps: all upper layers empty") {
  const GroundPlaneModel model{2.0, 0.5, 16};
  SceneLabeling scene;
  scene.model = model;
  scene.columns.push_back({1, 1, 1, Label::Vehicle, 0});
  const int height = 6;
  const RenderedMaps maps = render_maps(scene, height);
  for (int y = 0; y < height; ++y) {
    CHECK(maps.labels.at(0, y) == Label::Ground);
    CHECK(maps.disparity.at(0, y) == model.ground_disparity(y + 1));
  }
}

TEST_CASE("render_maps: single-pixel column") {
  const GroundPlaneModel model{1.0, 0.5, 4};
  SceneLabeling scene;
  scene.model = model;
  scene.columns.push_back({1, 1, 1, Label::Vehicle, 0});
  const RenderedMaps maps = render_maps(scene, 1);
  CHECK(maps.labels.at(0, 0) == Label::Ground);
  CHECK(maps.disparity.at(0, 0) == model.ground_disparity(1));
}

TEST_CASE("render_maps: four spans land on the documented rows") {
  const GroundPlaneModel model{1.0, 1.0, 64};  // ground disparity at row 8 is 7
  SceneLabeling scene;
  scene.model = model;
  scene.columns.push_back({8, 5, 3, Label::Vehicle, 2});
  const RenderedMaps maps = render_maps(scene, 10);

  const Label expected[10] = {Label::Sky,     Label::Sky,     Label::Building, Label::Building,
                              Label::Vehicle, Label::Vehicle, Label::Vehicle,  Label::Ground,
                              Label::Ground,  Label::Ground};
  for (int y = 0; y < 10; ++y) CHECK(maps.labels.at(0, y) == expected[y]);

  CHECK(maps.disparity.at(0, 0) == 0);
  CHECK(maps.disparity.at(0, 2) == 2);
  CHECK(maps.disparity.at(0, 4) == 7);
  CHECK(maps.disparity.at(0, 7) == 7);
  CHECK(maps.disparity.at(0, 9) == 9);
}

TEST_CASE("rendered labelings always respect the layer order") {
  testutil::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int height = rng.uniform(1, 20);
    const int disparities = rng.uniform(2, 12);
    const GroundPlaneModel model = testutil::grid_model(rng, height, disparities);
    SceneLabeling scene;
    scene.model = model;
    const int width = rng.uniform(1, 6);
    for (int x = 0; x < width; ++x) {
      const ColumnAssignment a = testutil::random_feasible(rng, height, model);
      REQUIRE(is_feasible(a, model, height));
      scene.columns.push_back(a);
    }
    const RenderedMaps maps = render_maps(scene, height);
    CHECK(testutil::scene_layering_ok(maps.labels, maps.disparity));
  }
}

TEST_CASE("infeasible assignments are rejected with a reason") {
  const GroundPlaneModel model{1.0, 1.0, 8};
  const int height = 10;

  CHECK(describe_infeasibility({11, 1, 1, Label::Vehicle, 0}, model, height) != "");
  CHECK(describe_infeasibility({5, 6, 1, Label::Vehicle, 0}, model, height) != "");
  CHECK(describe_infeasibility({5, 3, 4, Label::Vehicle, 1}, model, height) != "");
  // empty building span must carry the sentinel
  CHECK(describe_infeasibility({5, 3, 3, Label::Vehicle, 2}, model, height) != "");
  // building disparity at or above the ground disparity of ground_top
  CHECK(describe_infeasibility({5, 3, 2, Label::Vehicle, 4}, model, height) != "");
  CHECK(describe_infeasibility({5, 3, 2, Label::Vehicle, 0}, model, height) != "");
  // object label outside the movable classes
  CHECK(describe_infeasibility({5, 3, 2, Label::Ground, 2}, model, height) != "");

  CHECK(describe_infeasibility({5, 3, 2, Label::Vehicle, 3}, model, height) == "");
  CHECK(describe_infeasibility({5, 3, 3, Label::Pedestrian, 0}, model, height) == "");
}

TEST_CASE("config parsing") {
  const char* text =
      "# engine settings\n"
      "disparities = 64\n"
      "patch_size = 11\n"
      "beta = 1.5\n"
      "horizon_row = 40.25  # real-valued rows are fine\n"
      "ground_slope = 0.5\n";
  const EngineConfig config = parse_config(text);
  CHECK(config.disparity_count == 64);
  CHECK(config.patch_size == 11);
  CHECK(config.appearance_weight == doctest::Approx(1.5));
  CHECK(config.horizon_row == doctest::Approx(40.25));
  CHECK(config.ground_slope == doctest::Approx(0.5));
  CHECK(config.ground_model().disparity_count == 64);

  SUBCASE("missing keys are named") {
    CHECK_THROWS_WITH_AS(parse_config("disparities = 4\npatch_size = 3\nbeta = 1\nhorizon_row = 2\n"),
                         doctest::Contains("ground_slope"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(""), doctest::Contains("disparities"), ConfigError);
  }
  SUBCASE("bad values are named") {
    CHECK_THROWS_WITH_AS(
        parse_config("disparities = many\npatch_size = 3\nbeta = 1\nhorizon_row = 2\nground_slope = 1\n"),
        doctest::Contains("disparities"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("disparities = 8\npatch_size = 4\nbeta = 1\nhorizon_row = 2\nground_slope = 1\n"),
        doctest::Contains("patch_size"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("disparities = 8\npatch_size = 3\nbeta = 0\nhorizon_row = 2\nground_slope = 1\n"),
        doctest::Contains("beta"), ConfigError);
  }
  SUBCASE("unknown and duplicate keys are rejected") {
    CHECK_THROWS_WITH_AS(parse_config("disparities = 8\npatch_size = 3\nbeta = 1\nhorizon_row = 2\n"
                                      "ground_slope = 1\nextra = 9\n"),
                         doctest::Contains("extra"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("disparities = 8\ndisparities = 9\npatch_size = 3\nbeta = 1\n"
                                      "horizon_row = 2\nground_slope = 1\n"),
                         doctest::Contains("duplicate"), ConfigError);
  }
}

TEST_CASE("config round trip") {
  EngineConfig config;
  config.disparity_count = 48;
  config.patch_size = 7;
  config.appearance_weight = 2.25;
  config.horizon_row = 17.5;
  config.ground_slope = 0.75;
  const EngineConfig parsed = parse_config(format_config(config));
  CHECK(parsed.disparity_count == config.disparity_count);
  CHECK(parsed.patch_size == config.patch_size);
  CHECK(parsed.appearance_weight == config.appearance_weight);
  CHECK(parsed.horizon_row == config.horizon_row);
  CHECK(parsed.ground_slope == config.ground_slope);
}
