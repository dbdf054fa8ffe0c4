#include "layered/infer.hpp"

#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace layered {
namespace {

inline std::uint64_t now_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

}  // namespace

void ColumnSolver::build_table(const ColumnCosts& costs) {
  const int height = costs.height;
  const std::size_t stride = static_cast<std::size_t>(height) + 1;

  q_.height = height;
  q_.values_.assign(stride * stride, 0.0);
  q_.best_top_.assign(stride * stride, 0);
  q_.best_disparity_.assign(stride * stride, 0);

  // Running row over object_top: seeded with the empty-building completion
  // (sky only above object_top), then improved as disparities fold in.
  running_value_.assign(stride, 0.0);
  running_top_.assign(stride, 0);
  running_disparity_.assign(stride, 0);
  double* value = running_value_.data();
  std::int32_t* top = running_top_.data();
  std::int32_t* disparity = running_disparity_.data();
  const double* sky = tables_.sky_prefix();
  for (int h2 = 1; h2 <= height; ++h2) {
    value[h2] = sky[h2 - 1];
    top[h2] = h2;
  }

  int next_disparity = 1;
  for (int h1 = 1; h1 <= height; ++h1) {
    const int limit = costs.ground_profile[static_cast<std::size_t>(h1 - 1)];
    while (next_disparity < limit) {
      const int d = next_disparity++;
      const double* building = tables_.building_prefix(d);
      // Minimum over the building top of sky above it plus the building span
      // below it, tracked incrementally: split on prefix sums, the top-row
      // dependent part is a running minimum.
      double best = std::numeric_limits<double>::infinity();
      int best_top = 0;
      for (int h2 = 1; h2 <= height; ++h2) {
        if (h2 >= 2) {
          const double g = sky[h2 - 2] - building[h2 - 2];
          if (g < best) {
            best = g;
            best_top = h2 - 1;
          }
        }
        if (best_top >= 1) {
          const double candidate = best + building[h2 - 1];
          if (candidate < value[h2]) {
            value[h2] = candidate;
            top[h2] = best_top;
            disparity[h2] = d;
          } else if (candidate == value[h2] &&
                     (best_top < top[h2] || (best_top == top[h2] && d < disparity[h2]))) {
            top[h2] = best_top;
            disparity[h2] = d;
          }
        }
      }
    }
    // Snapshot the running row; cells up to object_top == ground_top matter.
    const std::size_t row = static_cast<std::size_t>(h1) * stride;
    std::copy(value + 1, value + h1 + 1, q_.values_.begin() + row + 1);
    std::copy(top + 1, top + h1 + 1, q_.best_top_.begin() + row + 1);
    std::copy(disparity + 1, disparity + h1 + 1, q_.best_disparity_.begin() + row + 1);
  }
}

ColumnAssignment ColumnSolver::solve(const ColumnCosts& costs) {
  const int height = costs.height;

  const std::uint64_t t0 = now_ns();
  tables_.rebuild(costs);
  build_table(costs);
  const std::uint64_t t1 = now_ns();

  const double* ground = tables_.ground_prefix();
  const double ground_total = ground[height];

  double best = std::numeric_limits<double>::infinity();
  int best_h1 = 1, best_h2 = 1;
  Label best_label = Label::Vehicle;

  // The additive terms fixed by ground_top stay out of the inner loop, which
  // only tracks the running minima of (table cell - object prefix) for the
  // two object labels. Under integer-valued costs every sum here is exact,
  // so ties resolve identically to the exhaustive scan order: ground_top,
  // then object_top, then the table cell's building pair, then label code.
  for (int h1 = 1; h1 <= height; ++h1) {
    const int object_disparity = costs.ground_profile[static_cast<std::size_t>(h1 - 1)];
    const double* vehicle = tables_.object_prefix(Label::Vehicle, object_disparity);
    const double* pedestrian = tables_.object_prefix(Label::Pedestrian, object_disparity);
    const double* qrow = q_.values_.data() + static_cast<std::size_t>(h1) * (height + 1);

    double best_vehicle = std::numeric_limits<double>::infinity();
    double best_pedestrian = std::numeric_limits<double>::infinity();
    int arg_vehicle = 1, arg_pedestrian = 1;
    for (int h2 = 1; h2 <= h1; ++h2) {
      const double cell = qrow[h2];
      const double sv = cell - vehicle[h2 - 1];
      const double sp = cell - pedestrian[h2 - 1];
      if (sv < best_vehicle) {
        best_vehicle = sv;
        arg_vehicle = h2;
      }
      if (sp < best_pedestrian) {
        best_pedestrian = sp;
        arg_pedestrian = h2;
      }
    }

    const double ground_suffix = ground_total - ground[h1 - 1];
    const double total_vehicle = ground_suffix + vehicle[h1 - 1] + best_vehicle;
    const double total_pedestrian = ground_suffix + pedestrian[h1 - 1] + best_pedestrian;

    // smaller object_top wins equal totals, Vehicle wins equal object_top
    double candidate;
    int candidate_h2;
    Label candidate_label;
    if (total_pedestrian < total_vehicle ||
        (total_pedestrian == total_vehicle && arg_pedestrian < arg_vehicle)) {
      candidate = total_pedestrian;
      candidate_h2 = arg_pedestrian;
      candidate_label = Label::Pedestrian;
    } else {
      candidate = total_vehicle;
      candidate_h2 = arg_vehicle;
      candidate_label = Label::Vehicle;
    }
    if (candidate < best) {
      best = candidate;
      best_h1 = h1;
      best_h2 = candidate_h2;
      best_label = candidate_label;
    }
  }

  best_energy_ = best;
  ColumnAssignment result;
  result.ground_top = best_h1;
  result.object_top = best_h2;
  result.building_top = q_.building_top_at(best_h1, best_h2);
  result.building_disparity = q_.building_disparity_at(best_h1, best_h2);
  result.object_label = best_label;
  const std::uint64_t t2 = now_ns();

  table_ns_ += t1 - t0;
  scan_ns_ += t2 - t1;
  return result;
}

ColumnAssignment infer_column(const ColumnCosts& costs, const GroundPlaneModel& model,
                              const EngineConfig& config) {
  if (costs.height < 1) throw std::invalid_argument("column height must be >= 1");
  if (costs.disparity_count < 2) throw std::invalid_argument("disparity count must be >= 2");
  if (costs.disparity_count != config.disparity_count ||
      costs.disparity_count != model.disparity_count) {
    throw std::invalid_argument("disparity counts of costs, model, and config disagree");
  }
  for (int y = 1; y <= costs.height; ++y) {
    if (costs.ground_profile[static_cast<std::size_t>(y - 1)] != model.ground_disparity(y)) {
      throw std::invalid_argument("ground profile of costs disagrees with the model");
    }
  }
  ColumnSolver solver;
  return solver.solve(costs);
}

SceneLabeling infer_scene(const AppearanceCost& appearance, const CostVolume& volume,
                          const GroundPlaneModel& model, const EngineConfig& config, int threads,
                          InferTimings* timings) {
  if (appearance.width != volume.width || appearance.height != volume.height) {
    std::ostringstream os;
    os << "appearance " << appearance.width << "x" << appearance.height << " and cost volume "
       << volume.width << "x" << volume.height << " dimensions disagree";
    throw std::invalid_argument(os.str());
  }
  if (volume.disparity_count != config.disparity_count ||
      volume.disparity_count != model.disparity_count) {
    throw std::invalid_argument("disparity counts of volume, model, and config disagree");
  }

  const int width = appearance.width;
  SceneLabeling scene;
  scene.model = model;
  scene.columns.resize(static_cast<std::size_t>(width));

  int worker_count = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  worker_count = std::clamp(worker_count, 1, std::max(width, 1));

  std::mutex timing_mutex;
  auto run_range = [&](int begin, int end) {
    ColumnSolver solver;
    ColumnCosts costs(appearance.height, volume.disparity_count);
    for (int x = begin; x < end; ++x) {
      costs.assign_from(appearance, volume, model, x);
      scene.columns[static_cast<std::size_t>(x)] = solver.solve(costs);
    }
    if (timings != nullptr) {
      const std::lock_guard<std::mutex> lock(timing_mutex);
      timings->q_table_ns += solver.table_ns();
      timings->scan_ns += solver.scan_ns();
    }
  };

  if (worker_count == 1) {
    run_range(0, width);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    const int chunk = (width + worker_count - 1) / worker_count;
    for (int w = 0; w < worker_count; ++w) {
      const int begin = w * chunk;
      const int end = std::min(width, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : workers) t.join();
  }
  return scene;
}

}  // namespace layered
