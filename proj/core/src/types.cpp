#include "layered/types.hpp"

#include <sstream>

namespace layered {

const char* label_name(Label label) {
  switch (label) {
    case Label::Ground:
      return "Ground";
    case Label::Vehicle:
      return "Vehicle";
    case Label::Pedestrian:
      return "Pedestrian";
    case Label::Building:
      return "Building";
    case Label::Sky:
      return "Sky";
  }
  return "?";
}

std::string describe_image_violation(const GrayImage& image) {
  if (image.width < 1 || image.height < 1) return "image must be at least 1x1";
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const float v = image.at(x, y);
      if (!std::isfinite(v) || v < 0.0f || v > 1.0f) {
        std::ostringstream os;
        os << "intensity out of [0,1] at (" << x << "," << y << "): " << v;
        return os.str();
      }
    }
  }
  return {};
}

std::string describe_infeasibility(const ColumnAssignment& a, const GroundPlaneModel& model,
                                   int image_height) {
  if (image_height < 1) return "image height must be >= 1";
  if (!(1 <= a.building_top && a.building_top <= a.object_top && a.object_top <= a.ground_top &&
        a.ground_top <= image_height)) {
    std::ostringstream os;
    os << "layer tops must satisfy 1 <= building_top <= object_top <= ground_top <= H, got ("
       << a.building_top << ", " << a.object_top << ", " << a.ground_top << ") with H=" << image_height;
    return os.str();
  }
  if (a.object_label != Label::Vehicle && a.object_label != Label::Pedestrian) {
    return "object label must be Vehicle or Pedestrian";
  }
  const bool building_empty = a.building_top == a.object_top;
  if (building_empty) {
    if (a.building_disparity != 0) {
      return "empty building span requires the disparity sentinel 0";
    }
  } else {
    const int limit = model.ground_disparity(a.ground_top);
    if (a.building_disparity < 1 || a.building_disparity >= limit) {
      std::ostringstream os;
      os << "building disparity " << a.building_disparity << " outside [1, " << limit
         << ") given ground_top=" << a.ground_top;
      return os.str();
    }
  }
  return {};
}

RenderedMaps render_maps(const SceneLabeling& scene, int image_height) {
  const int width = scene.width();
  RenderedMaps out{LabelMap(width, image_height), DisparityMap(width, image_height)};
  for (int x = 0; x < width; ++x) {
    const ColumnAssignment& a = scene.columns[static_cast<std::size_t>(x)];
    const int object_disparity = scene.model.ground_disparity(a.ground_top);
    for (int y = 1; y <= image_height; ++y) {
      Label label;
      int disparity;
      if (y < a.building_top) {
        label = Label::Sky;
        disparity = 0;
      } else if (y < a.object_top) {
        label = Label::Building;
        disparity = a.building_disparity;
      } else if (y < a.ground_top) {
        label = a.object_label;
        disparity = object_disparity;
      } else {
        label = Label::Ground;
        disparity = scene.model.ground_disparity(y);
      }
      out.labels.at(x, y - 1) = label;
      out.disparity.at(x, y - 1) = disparity;
    }
  }
  return out;
}

}  // namespace layered
