#pragma once

#include <cstdint>
#include <vector>

#include "layered/column_energy.hpp"
#include "layered/config.hpp"
#include "layered/types.hpp"

namespace layered {

// Intermediate cost table for one column. Cell (ground_top, object_top)
// holds the best combined sky + building completion above an object span
// starting at object_top, minimized over the building top row and over every
// building disparity admissible for that ground_top (strictly below the
// ground disparity at ground_top, empty building allowed). Cells with
// object_top <= ground_top are meaningful; values are non-increasing in
// ground_top since raising it only relaxes the disparity constraint.
struct QTable {
  int height = 0;

  double value_at(int ground_top, int object_top) const {
    return values_[cell(ground_top, object_top)];
  }
  int building_top_at(int ground_top, int object_top) const {
    return best_top_[cell(ground_top, object_top)];
  }
  // 0 means the empty-building completion.
  int building_disparity_at(int ground_top, int object_top) const {
    return best_disparity_[cell(ground_top, object_top)];
  }

 private:
  friend class ColumnSolver;
  std::size_t cell(int ground_top, int object_top) const {
    return static_cast<std::size_t>(ground_top) * (height + 1) + object_top;
  }
  std::vector<double> values_;
  std::vector<std::int32_t> best_top_;
  std::vector<std::int32_t> best_disparity_;
};

// Per-column exact minimizer. Builds the intermediate table by folding
// building disparities into a running minimum as they become admissible,
// then scans every (ground_top, object_top, object label) combination
// against it. Ties are broken lexicographically: smaller ground_top, then
// object_top, then building_top, then lower label code, then smaller
// building disparity — the same order the exhaustive reference uses.
// Buffers are reused across solve() calls.
class ColumnSolver {
 public:
  ColumnAssignment solve(const ColumnCosts& costs);

  // State of the last solve, for inspection.
  const QTable& q_table() const { return q_; }
  double best_energy() const { return best_energy_; }

  // Aggregate wall time per stage across solve() calls.
  std::uint64_t table_ns() const { return table_ns_; }
  std::uint64_t scan_ns() const { return scan_ns_; }
  void reset_timers() { table_ns_ = scan_ns_ = 0; }

 private:
  void build_table(const ColumnCosts& costs);

  PrefixTables tables_;
  QTable q_;
  std::vector<double> running_value_;
  std::vector<std::int32_t> running_top_;
  std::vector<std::int32_t> running_disparity_;
  double best_energy_ = 0.0;
  std::uint64_t table_ns_ = 0;
  std::uint64_t scan_ns_ = 0;
};

// Minimizes the data term of one column over the feasible assignment set.
// The returned assignment is always feasible; the all-ground column is a
// fallback member of every feasible set.
ColumnAssignment infer_column(const ColumnCosts& costs, const GroundPlaneModel& model,
                              const EngineConfig& config);

struct InferTimings {
  std::uint64_t q_table_ns = 0;
  std::uint64_t scan_ns = 0;
};

// Solves all W columns independently; column order in the result matches the
// input. Columns may be processed by `threads` workers (0 = hardware
// concurrency) with no shared mutable state; output is identical for every
// thread count. When `timings` is given, per-stage compute time summed over
// columns is accumulated into it.
SceneLabeling infer_scene(const AppearanceCost& appearance, const CostVolume& volume,
                          const GroundPlaneModel& model, const EngineConfig& config,
                          int threads = 0, InferTimings* timings = nullptr);

}  // namespace layered
