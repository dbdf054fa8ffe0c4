#include "layered/column_energy.hpp"

#include <stdexcept>

namespace layered {

void ColumnCosts::resize(int h, int d) {
  height = h;
  disparity_count = d;
  appearance.assign(static_cast<std::size_t>(kLabelCount) * h, 0.0f);
  depth.assign(static_cast<std::size_t>(d) * h, 0.0f);
  ground_profile.assign(static_cast<std::size_t>(h), 0);
}

void ColumnCosts::set_ground_profile(const GroundPlaneModel& model) {
  for (int y = 1; y <= height; ++y) {
    ground_profile[static_cast<std::size_t>(y - 1)] = model.ground_disparity(y);
  }
}

void ColumnCosts::assign_from(const AppearanceCost& appearance_cost, const CostVolume& volume,
                              const GroundPlaneModel& model, int x) {
  if (height != appearance_cost.height || disparity_count != volume.disparity_count) {
    resize(appearance_cost.height, volume.disparity_count);
  }
  for (int l = 0; l < kLabelCount; ++l) {
    for (int y0 = 0; y0 < height; ++y0) {
      appearance[static_cast<std::size_t>(l) * height + y0] =
          appearance_cost.at(x, y0, static_cast<Label>(l));
    }
  }
  for (int d = 0; d < disparity_count; ++d) {
    for (int y0 = 0; y0 < height; ++y0) {
      depth[static_cast<std::size_t>(d) * height + y0] = volume.at(x, y0, d);
    }
  }
  set_ground_profile(model);
}

ColumnCosts ColumnCosts::from_tensors(const AppearanceCost& appearance_cost,
                                      const CostVolume& volume, const GroundPlaneModel& model,
                                      int x) {
  ColumnCosts costs(appearance_cost.height, volume.disparity_count);
  costs.assign_from(appearance_cost, volume, model, x);
  return costs;
}

double column_energy(const ColumnCosts& costs, const ColumnAssignment& a,
                     const GroundPlaneModel& model) {
  const std::string violation = describe_infeasibility(a, model, costs.height);
  if (!violation.empty()) throw std::invalid_argument(violation);

  double total = 0.0;
  for (int y = 1; y < a.building_top; ++y) {
    total += costs.appearance_at(y, Label::Sky) + costs.depth_at(y, 0);
  }
  for (int y = a.building_top; y < a.object_top; ++y) {
    total += costs.appearance_at(y, Label::Building) + costs.depth_at(y, a.building_disparity);
  }
  const int object_disparity = costs.ground_profile[static_cast<std::size_t>(a.ground_top - 1)];
  for (int y = a.object_top; y < a.ground_top; ++y) {
    total += costs.appearance_at(y, a.object_label) + costs.depth_at(y, object_disparity);
  }
  for (int y = a.ground_top; y <= costs.height; ++y) {
    total += costs.appearance_at(y, Label::Ground) +
             costs.depth_at(y, costs.ground_profile[static_cast<std::size_t>(y - 1)]);
  }
  return total;
}

void PrefixTables::rebuild(const ColumnCosts& costs) {
  height_ = costs.height;
  disparity_count_ = costs.disparity_count;
  const std::size_t stride = static_cast<std::size_t>(height_) + 1;

  sky_.assign(stride, 0.0);
  ground_.assign(stride, 0.0);
  building_.assign(stride * disparity_count_, 0.0);
  object_.assign(stride * disparity_count_ * 2, 0.0);

  for (int y = 1; y <= height_; ++y) {
    const int gd = costs.ground_profile[static_cast<std::size_t>(y - 1)];
    sky_[y] = sky_[y - 1] + costs.appearance_at(y, Label::Sky) + costs.depth_at(y, 0);
    ground_[y] = ground_[y - 1] + costs.appearance_at(y, Label::Ground) + costs.depth_at(y, gd);
  }
  for (int d = 0; d < disparity_count_; ++d) {
    double* building = building_.data() + static_cast<std::size_t>(d) * stride;
    double* vehicle = object_.data() + static_cast<std::size_t>(d) * stride;
    double* pedestrian = object_.data() + (static_cast<std::size_t>(disparity_count_) + d) * stride;
    for (int y = 1; y <= height_; ++y) {
      const double depth = costs.depth_at(y, d);
      building[y] = building[y - 1] + costs.appearance_at(y, Label::Building) + depth;
      vehicle[y] = vehicle[y - 1] + costs.appearance_at(y, Label::Vehicle) + depth;
      pedestrian[y] = pedestrian[y - 1] + costs.appearance_at(y, Label::Pedestrian) + depth;
    }
  }
}

}  // namespace layered
