#pragma once

#include <cstdint>
#include <utility>

#include "layered/column_energy.hpp"
#include "layered/config.hpp"
#include "layered/types.hpp"

namespace layered {

// Height guard for the exhaustive solver; it enumerates on the order of
// H^3 * L * D assignments per column and is meant for test scale only.
inline constexpr int kBruteForceMaxHeight = 64;

// Visits every feasible assignment for a column of the given height, in the
// tie-break order (ground_top, object_top, building_top, label, disparity)
// ascending.
template <typename Fn>
void for_each_feasible(int image_height, const GroundPlaneModel& model, Fn&& fn) {
  for (int h1 = 1; h1 <= image_height; ++h1) {
    const int disparity_limit = model.ground_disparity(h1);
    for (int h2 = 1; h2 <= h1; ++h2) {
      for (int h3 = 1; h3 <= h2; ++h3) {
        for (const Label label : kObjectLabels) {
          if (h3 == h2) {
            fn(ColumnAssignment{h1, h2, h3, label, 0});
          } else {
            for (int d = 1; d < disparity_limit; ++d) {
              fn(ColumnAssignment{h1, h2, h3, label, d});
            }
          }
        }
      }
    }
  }
}

std::uint64_t count_feasible(int image_height, const GroundPlaneModel& model);

// Exhaustive reference solver: evaluates column_energy on every feasible
// assignment and keeps the first minimum in tie-break order. Throws when the
// column height exceeds kBruteForceMaxHeight.
ColumnAssignment brute_force_column(const ColumnCosts& costs, const GroundPlaneModel& model,
                                    const EngineConfig& config);

// Same search, also reporting the minimal energy.
std::pair<ColumnAssignment, double> brute_force_column_with_energy(const ColumnCosts& costs,
                                                                   const GroundPlaneModel& model);

}  // namespace layered
