#pragma once

#include <string>
#include <vector>

#include "layered/appearance.hpp"
#include "layered/cost_volume.hpp"

namespace layered {

// Raw tensor container: one ASCII header line "LLT1 <W> <H> <C>\n" followed
// by exactly C*W*H little-endian 32-bit floats, channel planes in order,
// row-major within each plane.
struct RawTensor {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<float> values;

  RawTensor() = default;
  RawTensor(int w, int h, int c)
      : width(w), height(h), channels(c), values(static_cast<std::size_t>(w) * h * c, 0.0f) {}

  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(c) * height + y) * width + x;
  }
  float at(int x, int y, int c) const { return values[index(x, y, c)]; }
  float& at(int x, int y, int c) { return values[index(x, y, c)]; }
};

// Throws std::runtime_error on malformed headers or when the payload byte
// count does not match the header exactly.
RawTensor read_tensor(const std::string& path);
void write_tensor(const std::string& path, const RawTensor& tensor);

// Conversions; the score-map load validates the probability invariants and
// throws naming the first offending pixel.
ScoreMap score_map_from_tensor(const RawTensor& tensor);
RawTensor tensor_from_score_map(const ScoreMap& scores);
CostVolume cost_volume_from_tensor(const RawTensor& tensor);
RawTensor tensor_from_cost_volume(const CostVolume& volume);

}  // namespace layered
