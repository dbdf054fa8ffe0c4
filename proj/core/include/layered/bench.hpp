#pragma once

#include <string>
#include <vector>

namespace layered {

struct StageSample {
  int height = 0;
  double cost_volume_ms = 0.0;
  double q_table_ms = 0.0;
  double inference_ms = 0.0;
  double total_ms = 0.0;
};

struct ScalingReport {
  int width = 0;
  int disparity_count = 0;
  int repeats = 0;
  std::vector<StageSample> samples;
  // Log-log least-squares slope of the inference stage against height.
  double inference_exponent = 0.0;
};

// Times the pipeline stages on synthetic scenes of the given heights (single
// threaded, median of `repeats` runs per stage) and fits the height scaling
// of the inference stage.
ScalingReport run_scaling_bench(const std::vector<int>& heights, int width, int disparity_count,
                                int repeats, int patch_size = 11);

// Aligned table plus "key=value" lines (fitted_exponent, total_ms_<H>).
std::string format_scaling_report(const ScalingReport& report);

}  // namespace layered
