#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

// Row convention: layer boundaries and ground-plane queries use row numbers
// 1..H counted from the image top. Raster containers (Grid, cost tensors)
// use 0-based (x, y) pixel indices.

namespace layered {

// Semantic classes. The integer codes are stable: they order the channel
// planes in tensor files and break ties between equal-energy labelings.
enum class Label : std::uint8_t {
  Ground = 0,
  Vehicle = 1,
  Pedestrian = 2,
  Building = 3,
  Sky = 4,
};

inline constexpr int kLabelCount = 5;

// Labels admitted in the movable-object layer, in tie-break order.
inline constexpr std::array<Label, 2> kObjectLabels = {Label::Vehicle, Label::Pedestrian};

const char* label_name(Label label);

template <typename T>
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<T> cells;

  Grid() = default;
  Grid(int w, int h, T fill = T{})
      : width(w), height(h), cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  T& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }
  const T& at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }

  bool operator==(const Grid&) const = default;
};

// Intensities normalized to [0, 1], row-major.
using GrayImage = Grid<float>;
using LabelMap = Grid<Label>;
using DisparityMap = Grid<int>;
using MaskImage = Grid<std::uint8_t>;

// Empty when every intensity is finite and within [0, 1], otherwise a
// description naming the first offending pixel.
std::string describe_image_violation(const GrayImage& image);

// Maps an image row to the disparity of the ground plane imaged there.
struct GroundPlaneModel {
  double horizon_row = 0.0;  // row at which the ground reaches disparity zero
  double slope = 0.5;        // disparity growth per row below the horizon, > 0
  int disparity_count = 2;   // number of disparity levels

  // Ground disparity for row y: round-half-up of slope * (y - horizon_row),
  // clamped to [0, disparity_count - 1]. Non-decreasing in y, zero at or
  // above the horizon.
  int ground_disparity(int y) const {
    const double value = slope * (static_cast<double>(y) - horizon_row);
    const int level = static_cast<int>(std::floor(value + 0.5));
    return std::clamp(level, 0, disparity_count - 1);
  }

  bool operator==(const GroundPlaneModel&) const = default;
};

// The per-column unknowns. Spans in rows, top to bottom:
//   sky       [1, building_top - 1]                 at disparity 0
//   building  [building_top, object_top - 1]        at building_disparity
//   object    [object_top, ground_top - 1]          at the ground disparity of row ground_top
//   ground    [ground_top, H]                       following the ground plane
// Any of the three upper spans may be empty (equal bounds); the ground span
// never is. When the building span is empty, building_disparity is the
// sentinel 0 so that assignment equality is well defined.
struct ColumnAssignment {
  int ground_top = 1;
  int object_top = 1;
  int building_top = 1;
  Label object_label = Label::Vehicle;  // Vehicle or Pedestrian
  int building_disparity = 0;

  bool operator==(const ColumnAssignment&) const = default;
};

// Empty when `a` is feasible for the model and image height, otherwise a
// description of the violated rule.
std::string describe_infeasibility(const ColumnAssignment& a, const GroundPlaneModel& model,
                                   int image_height);

inline bool is_feasible(const ColumnAssignment& a, const GroundPlaneModel& model, int image_height) {
  return describe_infeasibility(a, model, image_height).empty();
}

// One assignment per image column plus the ground model that scoped them.
struct SceneLabeling {
  std::vector<ColumnAssignment> columns;
  GroundPlaneModel model;

  int width() const { return static_cast<int>(columns.size()); }
};

struct RenderedMaps {
  LabelMap labels;
  DisparityMap disparity;
};

// Materializes the per-pixel label and disparity maps of a labeling. Every
// pixel is defined; per column the label sequence follows the layer order
// and the disparity sequence is non-decreasing top to bottom.
RenderedMaps render_maps(const SceneLabeling& scene, int image_height);

}  // namespace layered
