#pragma once

#include <vector>

#include "layered/config.hpp"
#include "layered/types.hpp"

namespace layered {

// Per-pixel depth data term over all disparity levels. Stored slice-major:
// slice d is a row-major W x H plane of matching costs at disparity d.
struct CostVolume {
  int width = 0;
  int height = 0;
  int disparity_count = 0;
  std::vector<float> costs;

  CostVolume() = default;
  CostVolume(int w, int h, int d)
      : width(w),
        height(h),
        disparity_count(d),
        costs(static_cast<std::size_t>(w) * h * d, 0.0f) {}

  std::size_t index(int x, int y, int d) const {
    return (static_cast<std::size_t>(d) * height + y) * width + x;
  }
  float at(int x, int y, int d) const { return costs[index(x, y, d)]; }
  float& at(int x, int y, int d) { return costs[index(x, y, d)]; }
};

// Box-filtered absolute intensity difference between a rectified pair,
// computed with horizontal-then-vertical sliding windows. The cost at
// (x, y, d) compares the left pixel at column x against the right pixel at
// column x - d; shifts falling off the image contribute the maximum
// difference 1.0. Patches are clipped at the borders and normalized by the
// number of in-image pixels.
CostVolume build_cost_volume(const GrayImage& left, const GrayImage& right,
                             const EngineConfig& config);

// Same contract as build_cost_volume, computed by direct per-pixel patch
// summation. Reference path for validating the sliding-window one.
CostVolume naive_cost_volume(const GrayImage& left, const GrayImage& right,
                             const EngineConfig& config);

}  // namespace layered
