#include "layered/tensor_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "layered/pnm_io.hpp"

namespace layered {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

}  // namespace

RawTensor read_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");

  std::string header;
  if (!std::getline(in, header)) fail(path, "missing header line");
  std::istringstream fields(header);
  std::string magic;
  RawTensor tensor;
  if (!(fields >> magic >> tensor.width >> tensor.height >> tensor.channels) || magic != "LLT1") {
    fail(path, "expected 'LLT1 <W> <H> <C>' header, found: " + header);
  }
  std::string rest;
  if (fields >> rest) fail(path, "trailing content in header: " + rest);
  if (tensor.width < 1 || tensor.height < 1 || tensor.channels < 1) fail(path, "bad dimensions");

  const std::size_t count =
      static_cast<std::size_t>(tensor.width) * tensor.height * tensor.channels;
  std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (payload.size() != count * 4) {
    fail(path, "payload is " + std::to_string(payload.size()) + " bytes, header promises " +
                   std::to_string(count * 4));
  }
  tensor.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto b0 = static_cast<std::uint32_t>(static_cast<unsigned char>(payload[4 * i]));
    const auto b1 = static_cast<std::uint32_t>(static_cast<unsigned char>(payload[4 * i + 1]));
    const auto b2 = static_cast<std::uint32_t>(static_cast<unsigned char>(payload[4 * i + 2]));
    const auto b3 = static_cast<std::uint32_t>(static_cast<unsigned char>(payload[4 * i + 3]));
    tensor.values[i] = std::bit_cast<float>(b0 | (b1 << 8) | (b2 << 16) | (b3 << 24));
  }
  return tensor;
}

void write_tensor(const std::string& path, const RawTensor& tensor) {
  const std::size_t count =
      static_cast<std::size_t>(tensor.width) * tensor.height * tensor.channels;
  if (tensor.values.size() != count) {
    fail(path, "tensor value count does not match its dimensions");
  }
  std::string out = "LLT1 " + std::to_string(tensor.width) + " " + std::to_string(tensor.height) +
                    " " + std::to_string(tensor.channels) + "\n";
  out.reserve(out.size() + count * 4);
  for (const float v : tensor.values) {
    const auto bits = std::bit_cast<std::uint32_t>(v);
    out.push_back(static_cast<char>(bits & 0xff));
    out.push_back(static_cast<char>((bits >> 8) & 0xff));
    out.push_back(static_cast<char>((bits >> 16) & 0xff));
    out.push_back(static_cast<char>((bits >> 24) & 0xff));
  }
  write_file_atomic(path, out);
}

ScoreMap score_map_from_tensor(const RawTensor& tensor) {
  if (tensor.channels != kLabelCount) {
    throw std::runtime_error("score map needs " + std::to_string(kLabelCount) +
                             " channels, tensor has " + std::to_string(tensor.channels));
  }
  ScoreMap scores(tensor.width, tensor.height);
  scores.values = tensor.values;
  const std::string violation = describe_score_violation(scores);
  if (!violation.empty()) throw std::runtime_error(violation);
  return scores;
}

RawTensor tensor_from_score_map(const ScoreMap& scores) {
  RawTensor tensor(scores.width, scores.height, kLabelCount);
  tensor.values = scores.values;
  return tensor;
}

CostVolume cost_volume_from_tensor(const RawTensor& tensor) {
  CostVolume volume(tensor.width, tensor.height, tensor.channels);
  volume.costs = tensor.values;
  for (std::size_t i = 0; i < volume.costs.size(); ++i) {
    const float v = volume.costs[i];
    if (!std::isfinite(v) || v < 0.0f) {
      throw std::runtime_error("cost volume entries must be finite and >= 0, entry " +
                               std::to_string(i) + " is " + std::to_string(v));
    }
  }
  return volume;
}

RawTensor tensor_from_cost_volume(const CostVolume& volume) {
  RawTensor tensor(volume.width, volume.height, volume.disparity_count);
  tensor.values = volume.costs;
  return tensor;
}

}  // namespace layered
