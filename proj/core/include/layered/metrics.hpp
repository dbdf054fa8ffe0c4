#pragma once

#include <array>
#include <string>

#include "layered/types.hpp"

namespace layered {

// Intersection over union of one class between two label maps, counting only
// pixels whose ignore-mask entry is zero (a nonzero mask value excludes the
// pixel; pass nullptr for no mask). Returns 1.0 when the class is absent
// from both maps.
double iou(const LabelMap& predicted, const LabelMap& truth, const MaskImage* ignore, Label cls);

struct IoUReport {
  std::array<double, kLabelCount> per_class{};
  std::array<bool, kLabelCount> present_in_truth{};
  // Means over the classes present in the truth map ("all" over the five
  // classes, "dynamic" over Vehicle and Pedestrian); 1.0 when no class
  // qualifies, consistent with the absent-in-both convention.
  double avg_all = 1.0;
  double avg_dynamic = 1.0;
};

IoUReport evaluate_labels(const LabelMap& predicted, const LabelMap& truth,
                          const MaskImage* ignore = nullptr);

// Aligned table, one row per class plus the two averages.
std::string format_report_table(const IoUReport& report);

// Machine-readable "key=value" lines.
std::string format_report_keys(const IoUReport& report);

}  // namespace layered
