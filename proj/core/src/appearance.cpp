#include "layered/appearance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace layered {

std::string describe_score_violation(const ScoreMap& scores) {
  if (scores.width < 1 || scores.height < 1) return "score map must be at least 1x1";
  for (int y = 0; y < scores.height; ++y) {
    for (int x = 0; x < scores.width; ++x) {
      double sum = 0.0;
      for (int l = 0; l < kLabelCount; ++l) {
        const float v = scores.at(x, y, static_cast<Label>(l));
        if (!std::isfinite(v) || v < 0.0f || v > 1.0f + 1e-3f) {
          std::ostringstream os;
          os << "score out of range at (" << x << "," << y << ") for "
             << label_name(static_cast<Label>(l)) << ": " << v;
          return os.str();
        }
        sum += v;
      }
      if (std::fabs(sum - 1.0) > 1e-3) {
        std::ostringstream os;
        os << "scores at (" << x << "," << y << ") sum to " << sum << ", expected 1 within 1e-3";
        return os.str();
      }
    }
  }
  return {};
}

AppearanceCost appearance_from_scores(const ScoreMap& scores, double weight, double floor) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("appearance weight must be finite and > 0");
  }
  if (!(floor > 0.0)) throw std::invalid_argument("probability floor must be > 0");
  AppearanceCost cost(scores.width, scores.height);
  for (std::size_t i = 0; i < scores.values.size(); ++i) {
    const double p = std::max(static_cast<double>(scores.values[i]), floor);
    cost.values[i] = static_cast<float>(-weight * std::log(p));
  }
  return cost;
}

namespace {

struct Priors {
  double v[kLabelCount];
};

constexpr Priors kAboveHorizon = {{0.02, 0.05, 0.05, 0.38, 0.50}};
constexpr Priors kNearHorizon = {{0.30, 0.22, 0.18, 0.25, 0.05}};
constexpr Priors kBottom = {{0.78, 0.10, 0.07, 0.04, 0.01}};

double intensity_weight(Label label, int decile) {
  switch (label) {
    case Label::Ground:
      return 1.0;
    case Label::Sky:
      return 0.40 + 0.16 * decile;
    case Label::Building:
      return 1.25 - 0.05 * decile;
    case Label::Vehicle:
      return 1.30 - 0.09 * decile;
    case Label::Pedestrian:
      return 1.20 - 0.07 * decile;
  }
  return 1.0;
}

}  // namespace

ScoreMap heuristic_scores(const GrayImage& image, const GroundPlaneModel& model) {
  const std::string violation = describe_image_violation(image);
  if (!violation.empty()) throw std::invalid_argument(violation);

  // Brightness deciles from the empirical distribution; ties take mid rank.
  std::vector<float> sorted(image.cells);
  std::sort(sorted.begin(), sorted.end());
  const double total = static_cast<double>(sorted.size());
  auto decile_of = [&](float v) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    const double cdf = (static_cast<double>(lo) + 0.5 * static_cast<double>(hi - lo)) / total;
    return std::min(9, static_cast<int>(cdf * 10.0));
  };

  const double horizon = model.horizon_row;
  const double span = static_cast<double>(image.height) - horizon;

  ScoreMap scores(image.width, image.height);
  for (int y0 = 0; y0 < image.height; ++y0) {
    const int y = y0 + 1;
    Priors prior;
    if (static_cast<double>(y) <= horizon || span <= 0.0) {
      prior = kAboveHorizon;
    } else {
      const double s = std::clamp((static_cast<double>(y) - horizon) / span, 0.0, 1.0);
      for (int l = 0; l < kLabelCount; ++l) {
        prior.v[l] = (1.0 - s) * kNearHorizon.v[l] + s * kBottom.v[l];
      }
    }
    for (int x = 0; x < image.width; ++x) {
      const int r = decile_of(image.at(x, y0));
      double raw[kLabelCount];
      double sum = 0.0;
      for (int l = 0; l < kLabelCount; ++l) {
        raw[l] = prior.v[l] * intensity_weight(static_cast<Label>(l), r);
        sum += raw[l];
      }
      for (int l = 0; l < kLabelCount; ++l) {
        scores.at(x, y0, static_cast<Label>(l)) = static_cast<float>(raw[l] / sum);
      }
    }
  }
  return scores;
}

}  // namespace layered
