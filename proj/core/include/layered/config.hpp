#pragma once

#include <stdexcept>
#include <string>

#include "layered/types.hpp"

namespace layered {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineConfig {
  int disparity_count = 64;        // >= 2
  int patch_size = 11;             // odd, >= 1
  double appearance_weight = 1.0;  // > 0
  double horizon_row = 0.0;
  double ground_slope = 0.5;       // > 0

  GroundPlaneModel ground_model() const {
    return GroundPlaneModel{horizon_row, ground_slope, disparity_count};
  }

  // Empty when all fields are in range, otherwise a description naming the
  // offending field.
  std::string describe_violation() const;
};

// Parses "key = value" text. Keys: disparities, patch_size, beta,
// horizon_row, ground_slope; all required, '#' starts a comment. Throws
// ConfigError naming the key on any missing, duplicate, unknown, or
// malformed entry.
EngineConfig parse_config(const std::string& text);

EngineConfig load_config(const std::string& path);

// Serializes a config in the format parse_config accepts.
std::string format_config(const EngineConfig& config);

}  // namespace layered
