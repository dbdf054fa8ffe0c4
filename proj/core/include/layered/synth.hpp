#pragma once

#include <cstdint>

#include "layered/appearance.hpp"
#include "layered/cost_volume.hpp"
#include "layered/types.hpp"

namespace layered {

// Ground model used by the synthetic generator and the bench harness when no
// model is configured: horizon a third of the way down, slope chosen so the
// bottom row reaches the top disparity level.
GroundPlaneModel default_ground_model(int image_height, int disparity_count);

struct SynthParams {
  int width = 64;
  int height = 48;
  int disparity_count = 16;
  double noise_app = 0.0;    // additive score perturbation magnitude
  double noise_depth = 0.0;  // additive matching-cost perturbation magnitude
  std::uint64_t seed = 0;
  GroundPlaneModel model;
};

// A generated scene with known ground truth. Scores concentrate on the true
// label (0.85 against 0.0375 elsewhere before noise); matching costs ramp
// away from the true disparity with slope 1/2 capped at 1. At zero noise the
// truth maps are the unique energy minimizer by those margins.
struct SynthScene {
  SceneLabeling truth;
  LabelMap truth_labels;
  DisparityMap truth_disparity;
  ScoreMap scores;
  CostVolume volume;
  std::uint64_t seed = 0;
};

// Deterministic per seed: layer boundaries random-walk across columns within
// the feasibility rules, then the tensors are derived from the rendered
// truth maps.
SynthScene generate(const SynthParams& params);

}  // namespace layered
