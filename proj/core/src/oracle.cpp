#include "layered/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace layered {

std::uint64_t count_feasible(int image_height, const GroundPlaneModel& model) {
  std::uint64_t count = 0;
  for_each_feasible(image_height, model, [&](const ColumnAssignment&) { ++count; });
  return count;
}

std::pair<ColumnAssignment, double> brute_force_column_with_energy(const ColumnCosts& costs,
                                                                   const GroundPlaneModel& model) {
  if (costs.height > kBruteForceMaxHeight) {
    throw std::invalid_argument("column height " + std::to_string(costs.height) +
                                " exceeds the brute-force guard of " +
                                std::to_string(kBruteForceMaxHeight));
  }
  ColumnAssignment best;
  double best_energy = std::numeric_limits<double>::infinity();
  for_each_feasible(costs.height, model, [&](const ColumnAssignment& a) {
    const double energy = column_energy(costs, a, model);
    if (energy < best_energy) {
      best_energy = energy;
      best = a;
    }
  });
  return {best, best_energy};
}

ColumnAssignment brute_force_column(const ColumnCosts& costs, const GroundPlaneModel& model,
                                    const EngineConfig& config) {
  if (costs.disparity_count != config.disparity_count ||
      costs.disparity_count != model.disparity_count) {
    throw std::invalid_argument("disparity counts of costs, model, and config disagree");
  }
  return brute_force_column_with_energy(costs, model).first;
}

}  // namespace layered
