#include "layered/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace layered {
namespace {

// Bounded draws on top of the engine's raw output so the byte stream per
// seed does not depend on the standard library's distribution internals.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double gaussian() {
    // Box-Muller; the tiny offset keeps the log argument positive.
    const double u = unit() + 1e-12;
    const double v = unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
  }

 private:
  std::mt19937_64 engine_;
};

ColumnAssignment clamp_feasible(ColumnAssignment a, const GroundPlaneModel& model, int height,
                                Sampler& rng) {
  a.ground_top = std::clamp(a.ground_top, 1, height);
  a.object_top = std::clamp(a.object_top, 1, a.ground_top);
  a.building_top = std::clamp(a.building_top, 1, a.object_top);
  const int limit = model.ground_disparity(a.ground_top);
  if (a.building_top == a.object_top || limit < 2) {
    a.building_top = a.object_top;
    a.building_disparity = 0;
  } else if (a.building_disparity < 1 || a.building_disparity >= limit) {
    a.building_disparity = rng.uniform(1, limit - 1);
  }
  return a;
}

}  // namespace

GroundPlaneModel default_ground_model(int image_height, int disparity_count) {
  GroundPlaneModel model;
  model.horizon_row = static_cast<double>(image_height) / 3.0;
  model.slope = (static_cast<double>(disparity_count) - 1.0) /
                std::max(1.0, static_cast<double>(image_height) - model.horizon_row);
  model.disparity_count = disparity_count;
  return model;
}

SynthScene generate(const SynthParams& params) {
  if (params.width < 1 || params.height < 1) throw std::invalid_argument("scene must be at least 1x1");
  if (params.disparity_count < 2) throw std::invalid_argument("disparity count must be >= 2");
  if (params.noise_app < 0.0 || params.noise_depth < 0.0) {
    throw std::invalid_argument("noise magnitudes must be >= 0");
  }
  if (params.model.disparity_count != params.disparity_count) {
    throw std::invalid_argument("model and scene disparity counts disagree");
  }

  const int width = params.width;
  const int height = params.height;
  const GroundPlaneModel& model = params.model;
  Sampler rng(params.seed);

  SynthScene scene;
  scene.seed = params.seed;
  scene.truth.model = model;
  scene.truth.columns.reserve(static_cast<std::size_t>(width));

  // Layer boundaries random-walk across columns, occasionally jumping to a
  // fresh configuration so scenes contain more than one structure.
  ColumnAssignment current{};
  for (int x = 0; x < width; ++x) {
    if (x == 0 || rng.unit() < 0.05) {
      current.ground_top = rng.uniform(1, height);
      current.object_top = rng.uniform(1, current.ground_top);
      current.building_top = rng.uniform(1, current.object_top);
      current.building_disparity = 1;  // re-drawn inside the clamp when needed
      current.object_label = rng.unit() < 0.5 ? Label::Vehicle : Label::Pedestrian;
    } else {
      current.ground_top += rng.uniform(-2, 2);
      current.object_top += rng.uniform(-2, 2);
      current.building_top += rng.uniform(-2, 2);
      if (current.building_disparity > 0) current.building_disparity += rng.uniform(-1, 1);
      if (rng.unit() < 0.08) {
        current.object_label =
            current.object_label == Label::Vehicle ? Label::Pedestrian : Label::Vehicle;
      }
    }
    current = clamp_feasible(current, model, height, rng);
    scene.truth.columns.push_back(current);
  }

  const RenderedMaps maps = render_maps(scene.truth, height);
  scene.truth_labels = maps.labels;
  scene.truth_disparity = maps.disparity;

  scene.scores = ScoreMap(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const Label truth = maps.labels.at(x, y);
      double raw[kLabelCount];
      double sum = 0.0;
      for (int l = 0; l < kLabelCount; ++l) {
        double v = static_cast<Label>(l) == truth ? 0.85 : 0.0375;
        if (params.noise_app > 0.0) {
          v = std::max(0.01, v + params.noise_app * rng.gaussian());
        }
        raw[l] = v;
        sum += v;
      }
      for (int l = 0; l < kLabelCount; ++l) {
        scene.scores.at(x, y, static_cast<Label>(l)) = static_cast<float>(raw[l] / sum);
      }
    }
  }

  scene.volume = CostVolume(width, height, params.disparity_count);
  for (int d = 0; d < params.disparity_count; ++d) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const int truth = maps.disparity.at(x, y);
        double cost = std::min(std::abs(d - truth) * 0.5, 1.0);
        if (params.noise_depth > 0.0) {
          cost = std::max(0.0, cost + params.noise_depth * rng.gaussian());
        }
        scene.volume.at(x, y, d) = static_cast<float>(cost);
      }
    }
  }
  return scene;
}

}  // namespace layered
