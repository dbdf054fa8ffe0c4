#include "layered/cost_volume.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace layered {
namespace {

void check_inputs(const GrayImage& left, const GrayImage& right, const EngineConfig& config) {
  if (left.width != right.width || left.height != right.height) {
    std::ostringstream os;
    os << "stereo pair dimensions differ: left " << left.width << "x" << left.height << ", right "
       << right.width << "x" << right.height;
    throw std::invalid_argument(os.str());
  }
  if (left.width < 1 || left.height < 1) throw std::invalid_argument("images must be at least 1x1");
  if (config.patch_size < 1 || config.patch_size % 2 == 0) {
    throw std::invalid_argument("patch size must be odd and >= 1");
  }
  if (config.disparity_count < 1) throw std::invalid_argument("disparity count must be >= 1");
  if (config.disparity_count > left.width) {
    std::ostringstream os;
    os << "disparity count " << config.disparity_count << " exceeds image width " << left.width;
    throw std::invalid_argument(os.str());
  }
}

inline float pixel_cost(const GrayImage& left, const GrayImage& right, int x, int y, int d) {
  if (x - d < 0) return 1.0f;  // shifted off the image: maximum difference
  return std::fabs(left.at(x, y) - right.at(x - d, y));
}

}  // namespace

CostVolume build_cost_volume(const GrayImage& left, const GrayImage& right,
                             const EngineConfig& config) {
  check_inputs(left, right, config);
  const int width = left.width;
  const int height = left.height;
  const int radius = config.patch_size / 2;

  CostVolume volume(width, height, config.disparity_count);
  std::vector<double> raw(static_cast<std::size_t>(width) * height);
  std::vector<double> row_sums(raw.size());

  for (int d = 0; d < config.disparity_count; ++d) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        raw[static_cast<std::size_t>(y) * width + x] = pixel_cost(left, right, x, y, d);
      }
    }

    // Horizontal pass: the pixel entering on the right is added and the one
    // leaving on the left is subtracted, with the window clipped to the image.
    for (int y = 0; y < height; ++y) {
      const double* in = raw.data() + static_cast<std::size_t>(y) * width;
      double* out = row_sums.data() + static_cast<std::size_t>(y) * width;
      double window = 0.0;
      for (int x = 0; x <= std::min(radius, width - 1); ++x) window += in[x];
      out[0] = window;
      for (int x = 1; x < width; ++x) {
        const int entering = x + radius;
        const int leaving = x - radius - 1;
        if (entering < width) window += in[entering];
        if (leaving >= 0) window -= in[leaving];
        out[x] = window;
      }
    }

    // Vertical pass over the horizontal sums, then normalization by the
    // clipped patch area.
    for (int x = 0; x < width; ++x) {
      const int x_count = std::min(x + radius, width - 1) - std::max(x - radius, 0) + 1;
      double window = 0.0;
      for (int y = 0; y <= std::min(radius, height - 1); ++y) {
        window += row_sums[static_cast<std::size_t>(y) * width + x];
      }
      for (int y = 0; y < height; ++y) {
        if (y > 0) {
          const int entering = y + radius;
          const int leaving = y - radius - 1;
          if (entering < height) window += row_sums[static_cast<std::size_t>(entering) * width + x];
          if (leaving >= 0) window -= row_sums[static_cast<std::size_t>(leaving) * width + x];
        }
        const int y_count = std::min(y + radius, height - 1) - std::max(y - radius, 0) + 1;
        volume.at(x, y, d) = static_cast<float>(window / (static_cast<double>(x_count) * y_count));
      }
    }
  }
  return volume;
}

CostVolume naive_cost_volume(const GrayImage& left, const GrayImage& right,
                             const EngineConfig& config) {
  check_inputs(left, right, config);
  const int width = left.width;
  const int height = left.height;
  const int radius = config.patch_size / 2;

  CostVolume volume(width, height, config.disparity_count);
  for (int d = 0; d < config.disparity_count; ++d) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        double sum = 0.0;
        int count = 0;
        for (int yy = std::max(y - radius, 0); yy <= std::min(y + radius, height - 1); ++yy) {
          for (int xx = std::max(x - radius, 0); xx <= std::min(x + radius, width - 1); ++xx) {
            sum += pixel_cost(left, right, xx, yy, d);
            ++count;
          }
        }
        volume.at(x, y, d) = static_cast<float>(sum / count);
      }
    }
  }
  return volume;
}

}  // namespace layered
