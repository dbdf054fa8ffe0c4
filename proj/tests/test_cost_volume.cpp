#include <doctest.h>

#include <cmath>

#include "layered/cost_volume.hpp"
#include "support/test_util.hpp"

using namespace layered;

namespace {

EngineConfig volume_config(int disparities, int patch) {
  EngineConfig config;
  config.disparity_count = disparities;
  config.patch_size = patch;
  return config;
}

GrayImage random_image(testutil::Rng& rng, int width, int height) {
  GrayImage image(width, height);
  for (float& v : image.cells) v = static_cast<float>(rng.unit());
  return image;
}

double max_abs_difference(const CostVolume& a, const CostVolume& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.costs.size(); ++i) {
    worst = std::max(worst, std::fabs(static_cast<double>(a.costs[i]) - b.costs[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("identical images give a zero slice at disparity zero") {
  testutil::Rng rng(11);
  const GrayImage image = random_image(rng, 9, 7);
  const CostVolume volume = build_cost_volume(image, image, volume_config(4, 3));
  for (int y = 0; y < 7; ++y) {
    for (int x = 0; x < 9; ++x) CHECK(volume.at(x, y, 0) == 0.0f);
  }
}

TEST_CASE("constant pair is zero wherever the shift stays on the image") {
  const GrayImage image(10, 6, 0.5f);
  const int patch = 3;
  const CostVolume volume = build_cost_volume(image, image, volume_config(4, patch));
  const int radius = patch / 2;
  for (int d = 0; d < 4; ++d) {
    for (int y = 0; y < 6; ++y) {
      for (int x = 0; x < 10; ++x) {
        if (x - radius >= d) {
          CHECK(volume.at(x, y, d) == 0.0f);
        } else if (d > 0) {
          // patches overlapping the off-image band pay the maximum difference
          CHECK(volume.at(x, y, d) > 0.0f);
        }
      }
    }
  }
}

TEST_CASE("single pixel with one disparity level is the plain difference") {
  GrayImage left(1, 1, 0.75f);
  GrayImage right(1, 1, 0.25f);
  const CostVolume volume = naive_cost_volume(left, right, volume_config(1, 1));
  CHECK(volume.at(0, 0, 0) == doctest::Approx(0.5).epsilon(1e-6));
  const CostVolume sliding = build_cost_volume(left, right, volume_config(1, 1));
  CHECK(sliding.at(0, 0, 0) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("sliding-window and direct summation agree") {
  testutil::Rng rng(23);
  const int patches[] = {1, 3, 5};
  for (int trial = 0; trial < 100; ++trial) {
    const int width = rng.uniform(1, 16);
    const int height = rng.uniform(1, 16);
    const int disparities = rng.uniform(1, std::min(8, width));
    const int patch = patches[rng.uniform(0, 2)];
    const GrayImage left = random_image(rng, width, height);
    const GrayImage right = random_image(rng, width, height);
    const EngineConfig config = volume_config(disparities, patch);
    const CostVolume fast = build_cost_volume(left, right, config);
    const CostVolume reference = naive_cost_volume(left, right, config);
    CHECK(max_abs_difference(fast, reference) <= 1e-5);
  }
}

TEST_CASE("costs are finite and non-negative") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int width = rng.uniform(2, 12);
    const int height = rng.uniform(1, 12);
    const int disparities = rng.uniform(1, std::min(6, width));
    const GrayImage left = random_image(rng, width, height);
    const GrayImage right = random_image(rng, width, height);
    const CostVolume volume = build_cost_volume(left, right, volume_config(disparities, 3));
    for (const float v : volume.costs) {
      CHECK(std::isfinite(v));
      CHECK(v >= 0.0f);
    }
  }
}

TEST_CASE("a shifted copy is matched at its true disparity in the interior") {
  testutil::Rng rng(47);
  const int width = 32, height = 16, shift = 2, patch = 3;
  const GrayImage right = random_image(rng, width, height);
  GrayImage left(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      left.at(x, y) = right.at(std::max(x - shift, 0), y);
    }
  }
  const CostVolume volume = build_cost_volume(left, right, volume_config(6, patch));
  const int margin = patch + shift;
  for (int y = margin; y < height - margin; ++y) {
    for (int x = margin; x < width - margin; ++x) {
      CHECK(volume.at(x, y, shift) == 0.0f);
      for (int d = 0; d < 6; ++d) CHECK(volume.at(x, y, d) >= volume.at(x, y, shift));
    }
  }
}

TEST_CASE("input errors name the offending shapes") {
  const GrayImage left(8, 6, 0.0f);
  const GrayImage right(7, 6, 0.0f);
  CHECK_THROWS_WITH_AS(build_cost_volume(left, right, volume_config(4, 3)),
                       doctest::Contains("8x6"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_cost_volume(left, left, volume_config(9, 3)),
                       doctest::Contains("exceeds image width"), std::invalid_argument);
  CHECK_THROWS_AS(naive_cost_volume(left, left, volume_config(4, 2)), std::invalid_argument);
}
