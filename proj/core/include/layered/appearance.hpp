#pragma once

#include <vector>

#include "layered/types.hpp"

namespace layered {

// Floor applied to probabilities before the log so that file-borne score
// maps containing exact zeros still yield finite costs.
inline constexpr double kScoreFloor = 1e-6;

// Per-pixel class probabilities, one plane per label code.
struct ScoreMap {
  int width = 0;
  int height = 0;
  std::vector<float> values;  // plane-major by label, row-major within plane

  ScoreMap() = default;
  ScoreMap(int w, int h)
      : width(w), height(h), values(static_cast<std::size_t>(w) * h * kLabelCount, 0.0f) {}

  std::size_t index(int x, int y, Label l) const {
    return (static_cast<std::size_t>(static_cast<int>(l)) * height + y) * width + x;
  }
  float at(int x, int y, Label l) const { return values[index(x, y, l)]; }
  float& at(int x, int y, Label l) { return values[index(x, y, l)]; }
};

// Per-pixel appearance data term, same layout as ScoreMap.
struct AppearanceCost {
  int width = 0;
  int height = 0;
  std::vector<float> values;

  AppearanceCost() = default;
  AppearanceCost(int w, int h)
      : width(w), height(h), values(static_cast<std::size_t>(w) * h * kLabelCount, 0.0f) {}

  std::size_t index(int x, int y, Label l) const {
    return (static_cast<std::size_t>(static_cast<int>(l)) * height + y) * width + x;
  }
  float at(int x, int y, Label l) const { return values[index(x, y, l)]; }
  float& at(int x, int y, Label l) { return values[index(x, y, l)]; }
};

// Empty when all scores are finite, non-negative, at most 1, and sum to 1
// within 1e-3 per pixel; otherwise a description naming the first offending
// pixel. Exact zeros are allowed (the cost floor covers them).
std::string describe_score_violation(const ScoreMap& scores);

// cost = -weight * log(max(score, floor)).
AppearanceCost appearance_from_scores(const ScoreMap& scores, double weight,
                                      double floor = kScoreFloor);

// Deterministic stand-in scorer for self-contained runs; output quality is
// demo-grade. Each pixel's scores are proportional to
//
//   row_prior(label, y) * intensity_weight(label, r)
//
// normalized to sum to 1, where r in 0..9 is the pixel's brightness decile
// under the image's empirical intensity distribution (mid-ranked ties).
//
// row_prior, at or above the horizon row:
//   Ground .02, Vehicle .05, Pedestrian .05, Building .38, Sky .50
// below the horizon it blends linearly, by relative depth
// s = (y - horizon) / (H - horizon), between
//   near horizon: Ground .30, Vehicle .22, Pedestrian .18, Building .25, Sky .05
//   bottom row:   Ground .78, Vehicle .10, Pedestrian .07, Building .04, Sky .01
//
// intensity_weight(label, r):
//   Ground 1.0, Sky 0.40 + 0.16 r, Building 1.25 - 0.05 r,
//   Vehicle 1.30 - 0.09 r, Pedestrian 1.20 - 0.07 r
ScoreMap heuristic_scores(const GrayImage& image, const GroundPlaneModel& model);

}  // namespace layered
