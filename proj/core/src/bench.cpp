#include "layered/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "layered/infer.hpp"
#include "layered/synth.hpp"

namespace layered {
namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double elapsed_ms(std::chrono::steady_clock::time_point begin,
                  std::chrono::steady_clock::time_point end) {
  return std::chrono::duration<double, std::milli>(end - begin).count();
}

// Texture with enough horizontal variation that matching costs are nontrivial.
GrayImage textured_image(int width, int height, std::uint32_t salt) {
  GrayImage image(width, height);
  std::uint32_t state = 0x9e3779b9u ^ salt;
  for (float& v : image.cells) {
    state = state * 1664525u + 1013904223u;
    v = static_cast<float>(state >> 8) / 16777216.0f;
  }
  return image;
}

}  // namespace

ScalingReport run_scaling_bench(const std::vector<int>& heights, int width, int disparity_count,
                                int repeats, int patch_size) {
  if (heights.empty()) throw std::invalid_argument("at least one height is required");
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");

  ScalingReport report;
  report.width = width;
  report.disparity_count = disparity_count;
  report.repeats = repeats;

  for (const int height : heights) {
    EngineConfig config;
    config.disparity_count = disparity_count;
    config.patch_size = patch_size;
    const GroundPlaneModel model = default_ground_model(height, disparity_count);
    config.horizon_row = model.horizon_row;
    config.ground_slope = model.slope;

    SynthParams params;
    params.width = width;
    params.height = height;
    params.disparity_count = disparity_count;
    params.noise_app = 0.05;
    params.noise_depth = 0.05;
    params.seed = 1234u + static_cast<std::uint64_t>(height);
    params.model = model;
    const SynthScene scene = generate(params);
    const AppearanceCost appearance =
        appearance_from_scores(scene.scores, config.appearance_weight);

    const GrayImage right = textured_image(width, height, static_cast<std::uint32_t>(height));
    GrayImage left = right;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const int shift = scene.truth_disparity.at(x, y);
        left.at(x, y) = right.at(std::max(x - shift, 0), y);
      }
    }

    std::vector<double> volume_ms, table_ms, scan_ms;
    for (int r = 0; r < repeats; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const CostVolume volume = build_cost_volume(left, right, config);
      const auto t1 = std::chrono::steady_clock::now();
      volume_ms.push_back(elapsed_ms(t0, t1));
      (void)volume;

      InferTimings timings;
      (void)infer_scene(appearance, scene.volume, model, config, /*threads=*/1, &timings);
      table_ms.push_back(static_cast<double>(timings.q_table_ns) / 1e6);
      scan_ms.push_back(static_cast<double>(timings.scan_ns) / 1e6);
    }

    StageSample sample;
    sample.height = height;
    sample.cost_volume_ms = median(volume_ms);
    sample.q_table_ms = median(table_ms);
    sample.inference_ms = median(scan_ms);
    sample.total_ms = sample.cost_volume_ms + sample.q_table_ms + sample.inference_ms;
    report.samples.push_back(sample);
  }

  // Least squares on (log H, log inference time).
  if (report.samples.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(report.samples.size());
    for (const StageSample& s : report.samples) {
      const double x = std::log(static_cast<double>(s.height));
      const double y = std::log(std::max(s.inference_ms, 1e-9));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    report.inference_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return report;
}

std::string format_scaling_report(const ScalingReport& report) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof(line), "W=%d D=%d repeats=%d (single thread, median per stage)\n",
                report.width, report.disparity_count, report.repeats);
  out += line;
  out += "Component            ";
  for (const StageSample& s : report.samples) {
    std::snprintf(line, sizeof(line), " H=%-8d", s.height);
    out += line;
  }
  out += "\n";
  const auto row = [&](const char* name, double StageSample::*field) {
    std::snprintf(line, sizeof(line), "%-21s", name);
    out += line;
    for (const StageSample& s : report.samples) {
      std::snprintf(line, sizeof(line), " %-9.2f", s.*field);
      out += line;
    }
    out += "\n";
  };
  row("Cost volume (ms)", &StageSample::cost_volume_ms);
  row("Intermediate table (ms)", &StageSample::q_table_ms);
  row("Inference (ms)", &StageSample::inference_ms);
  row("Overall (ms)", &StageSample::total_ms);
  std::snprintf(line, sizeof(line), "fitted_exponent=%.3f\n", report.inference_exponent);
  out += line;
  for (const StageSample& s : report.samples) {
    std::snprintf(line, sizeof(line), "total_ms_%d=%.3f\n", s.height, s.total_ms);
    out += line;
  }
  return out;
}

}  // namespace layered
