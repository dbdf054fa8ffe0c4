#include "layered/metrics.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace layered {
namespace {

void check_dims(const LabelMap& predicted, const LabelMap& truth, const MaskImage* ignore) {
  if (predicted.width != truth.width || predicted.height != truth.height) {
    std::ostringstream os;
    os << "label map dimensions disagree: predicted " << predicted.width << "x" << predicted.height
       << ", truth " << truth.width << "x" << truth.height;
    throw std::invalid_argument(os.str());
  }
  if (ignore != nullptr && (ignore->width != truth.width || ignore->height != truth.height)) {
    throw std::invalid_argument("ignore mask dimensions disagree with the label maps");
  }
}

}  // namespace

double iou(const LabelMap& predicted, const LabelMap& truth, const MaskImage* ignore, Label cls) {
  check_dims(predicted, truth, ignore);
  std::uint64_t intersection = 0;
  std::uint64_t union_count = 0;
  for (int y = 0; y < truth.height; ++y) {
    for (int x = 0; x < truth.width; ++x) {
      if (ignore != nullptr && ignore->at(x, y) != 0) continue;
      const bool in_pred = predicted.at(x, y) == cls;
      const bool in_truth = truth.at(x, y) == cls;
      intersection += in_pred && in_truth;
      union_count += in_pred || in_truth;
    }
  }
  if (union_count == 0) return 1.0;
  return static_cast<double>(intersection) / static_cast<double>(union_count);
}

IoUReport evaluate_labels(const LabelMap& predicted, const LabelMap& truth,
                          const MaskImage* ignore) {
  check_dims(predicted, truth, ignore);
  IoUReport report;
  for (int l = 0; l < kLabelCount; ++l) {
    report.per_class[static_cast<std::size_t>(l)] =
        iou(predicted, truth, ignore, static_cast<Label>(l));
  }
  for (int y = 0; y < truth.height; ++y) {
    for (int x = 0; x < truth.width; ++x) {
      if (ignore != nullptr && ignore->at(x, y) != 0) continue;
      report.present_in_truth[static_cast<std::size_t>(truth.at(x, y))] = true;
    }
  }

  double sum_all = 0.0;
  int count_all = 0;
  for (int l = 0; l < kLabelCount; ++l) {
    if (!report.present_in_truth[static_cast<std::size_t>(l)]) continue;
    sum_all += report.per_class[static_cast<std::size_t>(l)];
    ++count_all;
  }
  report.avg_all = count_all > 0 ? sum_all / count_all : 1.0;

  double sum_dynamic = 0.0;
  int count_dynamic = 0;
  for (const Label l : kObjectLabels) {
    if (!report.present_in_truth[static_cast<std::size_t>(l)]) continue;
    sum_dynamic += report.per_class[static_cast<std::size_t>(l)];
    ++count_dynamic;
  }
  report.avg_dynamic = count_dynamic > 0 ? sum_dynamic / count_dynamic : 1.0;
  return report;
}

namespace {

// Table I row order.
constexpr Label kRowOrder[kLabelCount] = {Label::Ground, Label::Vehicle, Label::Pedestrian,
                                          Label::Sky, Label::Building};

std::string lower_name(Label l) {
  std::string name = label_name(l);
  for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return name;
}

}  // namespace

std::string format_report_table(const IoUReport& report) {
  char line[96];
  std::string out;
  out += "Class          IoU\n";
  for (const Label l : kRowOrder) {
    std::snprintf(line, sizeof(line), "%-14s %.4f%s\n", label_name(l),
                  report.per_class[static_cast<std::size_t>(l)],
                  report.present_in_truth[static_cast<std::size_t>(l)] ? "" : "  (absent in truth)");
    out += line;
  }
  std::snprintf(line, sizeof(line), "%-14s %.4f\n", "Avg (all)", report.avg_all);
  out += line;
  std::snprintf(line, sizeof(line), "%-14s %.4f\n", "Avg (dynamic)", report.avg_dynamic);
  out += line;
  return out;
}

std::string format_report_keys(const IoUReport& report) {
  char line[96];
  std::string out;
  for (const Label l : kRowOrder) {
    std::snprintf(line, sizeof(line), "iou_%s=%.6f\n", lower_name(l).c_str(),
                  report.per_class[static_cast<std::size_t>(l)]);
    out += line;
  }
  std::snprintf(line, sizeof(line), "avg_all=%.6f\n", report.avg_all);
  out += line;
  std::snprintf(line, sizeof(line), "avg_dynamic=%.6f\n", report.avg_dynamic);
  out += line;
  return out;
}

}  // namespace layered
