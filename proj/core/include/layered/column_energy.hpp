#pragma once

#include <vector>

#include "layered/appearance.hpp"
#include "layered/cost_volume.hpp"
#include "layered/types.hpp"

namespace layered {

// Appearance and depth data terms for one image column plus the ground-plane
// disparity per row. Accessors take row numbers 1..H.
struct ColumnCosts {
  int height = 0;
  int disparity_count = 0;
  std::vector<float> appearance;    // label-major: [label * height + (y - 1)]
  std::vector<float> depth;         // disparity-major: [d * height + (y - 1)]
  std::vector<int> ground_profile;  // ground disparity per row

  ColumnCosts() = default;
  ColumnCosts(int h, int d) { resize(h, d); }

  void resize(int h, int d);
  void set_ground_profile(const GroundPlaneModel& model);

  // Copies column x out of the full tensors.
  void assign_from(const AppearanceCost& appearance_cost, const CostVolume& volume,
                   const GroundPlaneModel& model, int x);
  static ColumnCosts from_tensors(const AppearanceCost& appearance_cost, const CostVolume& volume,
                                  const GroundPlaneModel& model, int x);

  double appearance_at(int y, Label l) const {
    return appearance[static_cast<std::size_t>(static_cast<int>(l)) * height + (y - 1)];
  }
  double depth_at(int y, int d) const {
    return depth[static_cast<std::size_t>(d) * height + (y - 1)];
  }
  float& appearance_ref(int y, Label l) {
    return appearance[static_cast<std::size_t>(static_cast<int>(l)) * height + (y - 1)];
  }
  float& depth_ref(int y, int d) {
    return depth[static_cast<std::size_t>(d) * height + (y - 1)];
  }
};

// Exact data term of one assignment: the sum over the four layer spans of
// appearance plus depth cost per pixel, evaluated by direct per-pixel
// summation. Throws std::invalid_argument identifying the violated
// feasibility rule when the assignment is invalid.
double column_energy(const ColumnCosts& costs, const ColumnAssignment& a,
                     const GroundPlaneModel& model);

// Cumulative row sums of every (label, disparity) pairing the energy uses,
// so any span total is retrievable in constant time. Prefix arrays have
// length H + 1 with p[k] = sum of rows 1..k.
class PrefixTables {
 public:
  PrefixTables() = default;
  explicit PrefixTables(const ColumnCosts& costs) { rebuild(costs); }

  void rebuild(const ColumnCosts& costs);

  int height() const { return height_; }
  int disparity_count() const { return disparity_count_; }

  // Span sums over the closed row range [top, bottom]; empty when top > bottom.
  double sky_span(int top, int bottom) const { return span(sky_.data(), top, bottom); }
  double ground_span(int top, int bottom) const { return span(ground_.data(), top, bottom); }
  double building_span(int disparity, int top, int bottom) const {
    return span(building_prefix(disparity), top, bottom);
  }
  double object_span(Label object, int disparity, int top, int bottom) const {
    return span(object_prefix(object, disparity), top, bottom);
  }

  const double* sky_prefix() const { return sky_.data(); }
  const double* ground_prefix() const { return ground_.data(); }
  const double* building_prefix(int disparity) const {
    return building_.data() + static_cast<std::size_t>(disparity) * (height_ + 1);
  }
  // object must be Vehicle or Pedestrian.
  const double* object_prefix(Label object, int disparity) const {
    const std::size_t slot = object == Label::Vehicle ? 0 : 1;
    return object_.data() +
           (slot * disparity_count_ + static_cast<std::size_t>(disparity)) * (height_ + 1);
  }

 private:
  static double span(const double* prefix, int top, int bottom) {
    if (top > bottom) return 0.0;
    return prefix[bottom] - prefix[top - 1];
  }

  int height_ = 0;
  int disparity_count_ = 0;
  std::vector<double> sky_;
  std::vector<double> ground_;
  std::vector<double> building_;
  std::vector<double> object_;
};

}  // namespace layered
