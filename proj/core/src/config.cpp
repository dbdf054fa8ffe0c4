#include "layered/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace layered {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigError("invalid value for '" + key + "': " + value);
  }
  if (used != value.size() || !std::isfinite(parsed)) {
    throw ConfigError("invalid value for '" + key + "': " + value);
  }
  return parsed;
}

int parse_integer(const std::string& key, const std::string& value) {
  const double parsed = parse_number(key, value);
  const double rounded = std::nearbyint(parsed);
  if (parsed != rounded) throw ConfigError("value for '" + key + "' must be an integer: " + value);
  return static_cast<int>(rounded);
}

}  // namespace

std::string EngineConfig::describe_violation() const {
  if (disparity_count < 2) return "disparities must be >= 2";
  if (patch_size < 1 || patch_size % 2 == 0) return "patch_size must be odd and >= 1";
  if (!(appearance_weight > 0.0) || !std::isfinite(appearance_weight)) return "beta must be finite and > 0";
  if (!std::isfinite(horizon_row)) return "horizon_row must be finite";
  if (!(ground_slope > 0.0) || !std::isfinite(ground_slope)) return "ground_slope must be finite and > 0";
  return {};
}

EngineConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_number) + " is not 'key = value': " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_number) + " has an empty key");
    if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'");
    entries[key] = value;
  }

  static const char* const kKeys[] = {"disparities", "patch_size", "beta", "horizon_row",
                                      "ground_slope"};
  for (const char* key : kKeys) {
    if (!entries.count(key)) throw ConfigError("missing key '" + std::string(key) + "'");
  }
  for (const auto& [key, value] : entries) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ConfigError("unknown key '" + key + "'");
  }

  EngineConfig config;
  config.disparity_count = parse_integer("disparities", entries["disparities"]);
  config.patch_size = parse_integer("patch_size", entries["patch_size"]);
  config.appearance_weight = parse_number("beta", entries["beta"]);
  config.horizon_row = parse_number("horizon_row", entries["horizon_row"]);
  config.ground_slope = parse_number("ground_slope", entries["ground_slope"]);

  const std::string violation = config.describe_violation();
  if (!violation.empty()) throw ConfigError(violation);
  return config;
}

EngineConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string format_config(const EngineConfig& config) {
  std::ostringstream os;
  os.precision(17);
  os << "disparities = " << config.disparity_count << "\n"
     << "patch_size = " << config.patch_size << "\n"
     << "beta = " << config.appearance_weight << "\n"
     << "horizon_row = " << config.horizon_row << "\n"
     << "ground_slope = " << config.ground_slope << "\n";
  return os.str();
}

}  // namespace layered
