// Command-line front end: label a stereo pair, verify the dynamic program
// against the exhaustive search, generate synthetic scenes, evaluate IoU,
// and benchmark scaling.
//
// Exit codes: 0 success, 1 usage, 2 I/O or parse failure, 3 verification
// failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "layered/bench.hpp"
#include "layered/config.hpp"
#include "layered/infer.hpp"
#include "layered/metrics.hpp"
#include "layered/oracle.hpp"
#include "layered/pnm_io.hpp"
#include "layered/synth.hpp"
#include "layered/tensor_io.hpp"

namespace {

using namespace layered;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

struct LabelOptions {
  std::string left, right, scores, cost, config, out_labels, out_disp;
  int threads = 0;
};

int cmd_label(const LabelOptions& opt) {
  const EngineConfig config = load_config(opt.config);
  const GroundPlaneModel model = config.ground_model();

  GrayImage left_image;
  if (!opt.left.empty()) {
    left_image = read_pgm8(opt.left);
    const std::string violation = describe_image_violation(left_image);
    if (!violation.empty()) throw std::runtime_error(opt.left + ": " + violation);
  }

  CostVolume volume;
  if (!opt.cost.empty()) {
    volume = cost_volume_from_tensor(read_tensor(opt.cost));
    if (volume.disparity_count != config.disparity_count) {
      throw std::runtime_error(opt.cost + ": has " + std::to_string(volume.disparity_count) +
                               " disparity planes, config expects " +
                               std::to_string(config.disparity_count));
    }
    if (!opt.left.empty() &&
        (volume.width != left_image.width || volume.height != left_image.height)) {
      throw std::runtime_error(opt.cost + ": dimensions disagree with " + opt.left);
    }
  } else {
    const GrayImage right_image = read_pgm8(opt.right);
    volume = build_cost_volume(left_image, right_image, config);
  }

  ScoreMap scores;
  if (!opt.scores.empty()) {
    scores = score_map_from_tensor(read_tensor(opt.scores));
    if (scores.width != volume.width || scores.height != volume.height) {
      std::ostringstream os;
      os << opt.scores << ": score map is " << scores.width << "x" << scores.height
         << ", cost volume is " << volume.width << "x" << volume.height;
      throw std::runtime_error(os.str());
    }
  } else {
    std::cerr << "warning: no score map supplied; using the built-in heuristic scorer "
                 "(demo-grade quality)\n";
    scores = heuristic_scores(left_image, model);
  }

  const AppearanceCost appearance = appearance_from_scores(scores, config.appearance_weight);
  const SceneLabeling scene = infer_scene(appearance, volume, model, config, opt.threads);
  const RenderedMaps maps = render_maps(scene, volume.height);

  write_label_ppm(opt.out_labels, maps.labels);
  Grid<std::uint16_t> disparity(maps.disparity.width, maps.disparity.height);
  for (std::size_t i = 0; i < disparity.cells.size(); ++i) {
    disparity.cells[i] = static_cast<std::uint16_t>(
        std::lround(maps.disparity.cells[i] * 256.0 / config.disparity_count));
  }
  write_pgm16(opt.out_disp, disparity);
  std::cout << "wrote " << opt.out_labels << " and " << opt.out_disp << "\n";
  return kExitOk;
}

struct CheckOptions {
  std::uint64_t seed = 1;
  int trials = 200;
  int max_h = 16;
  int max_d = 8;
};

void dump_instance(const ColumnCosts& costs, const GroundPlaneModel& model) {
  std::cout << "height = " << costs.height << ", disparities = " << costs.disparity_count
            << ", horizon_row = " << model.horizon_row << ", ground_slope = " << model.slope
            << "\n";
  for (int l = 0; l < kLabelCount; ++l) {
    std::cout << "appearance " << label_name(static_cast<Label>(l)) << ":";
    for (int y = 1; y <= costs.height; ++y) {
      std::cout << " " << costs.appearance_at(y, static_cast<Label>(l));
    }
    std::cout << "\n";
  }
  for (int d = 0; d < costs.disparity_count; ++d) {
    std::cout << "depth d=" << d << ":";
    for (int y = 1; y <= costs.height; ++y) std::cout << " " << costs.depth_at(y, d);
    std::cout << "\n";
  }
}

std::string describe_assignment(const ColumnAssignment& a) {
  std::ostringstream os;
  os << "(ground_top=" << a.ground_top << ", object_top=" << a.object_top
     << ", building_top=" << a.building_top << ", label=" << label_name(a.object_label)
     << ", building_disparity=" << a.building_disparity << ")";
  return os.str();
}

int cmd_check(const CheckOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  for (int trial = 0; trial < opt.trials; ++trial) {
    const int height = draw(1, opt.max_h);
    const int disparities = draw(2, opt.max_d);
    const double horizons[] = {1.0, height / 3.0, height / 2.0};
    const double slopes[] = {0.25, 0.5, 1.0};
    const GroundPlaneModel model{horizons[draw(0, 2)], slopes[draw(0, 2)], disparities};

    ColumnCosts costs(height, disparities);
    for (int l = 0; l < kLabelCount; ++l) {
      for (int y = 1; y <= height; ++y) {
        costs.appearance_ref(y, static_cast<Label>(l)) = static_cast<float>(draw(0, 9));
      }
    }
    for (int d = 0; d < disparities; ++d) {
      for (int y = 1; y <= height; ++y) {
        costs.depth_ref(y, d) = static_cast<float>(draw(0, 9));
      }
    }
    costs.set_ground_profile(model);

    EngineConfig config;
    config.disparity_count = disparities;
    config.horizon_row = model.horizon_row;
    config.ground_slope = model.slope;

    const ColumnAssignment fast = infer_column(costs, model, config);
    const auto [exhaustive, oracle_energy] = brute_force_column_with_energy(costs, model);
    const double fast_energy = column_energy(costs, fast, model);

    if (fast_energy != oracle_energy || !(fast == exhaustive)) {
      std::cout << "mismatch at trial " << trial << " (seed " << opt.seed << ")\n";
      dump_instance(costs, model);
      std::cout << "dynamic program: " << describe_assignment(fast) << " energy " << fast_energy
                << "\n";
      std::cout << "exhaustive:      " << describe_assignment(exhaustive) << " energy "
                << oracle_energy << "\n";
      return kExitVerification;
    }
  }
  std::cout << "checked " << opt.trials
            << " instances: dynamic program matches the exhaustive search\n";
  return kExitOk;
}

struct SynthOptions {
  std::uint64_t seed = 0;
  int width = 64;
  int height = 48;
  int disparities = 16;
  double noise_app = 0.0;
  double noise_depth = 0.0;
  std::string out_dir;
};

int cmd_synth(const SynthOptions& opt) {
  SynthParams params;
  params.width = opt.width;
  params.height = opt.height;
  params.disparity_count = opt.disparities;
  params.noise_app = opt.noise_app;
  params.noise_depth = opt.noise_depth;
  params.seed = opt.seed;
  params.model = default_ground_model(opt.height, opt.disparities);
  const SynthScene scene = generate(params);

  std::filesystem::create_directories(opt.out_dir);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(opt.out_dir) / name).string();
  };

  write_label_ppm(path("gt_labels.ppm"), scene.truth_labels);
  write_tensor(path("scores.llt1"), tensor_from_score_map(scene.scores));
  write_tensor(path("cost.llt1"), tensor_from_cost_volume(scene.volume));

  EngineConfig config;
  config.disparity_count = opt.disparities;
  config.patch_size = 11;
  config.appearance_weight = 1.0;
  config.horizon_row = params.model.horizon_row;
  config.ground_slope = params.model.slope;
  write_file_atomic(path("config.txt"), format_config(config));

  std::cout << "wrote gt_labels.ppm, scores.llt1, cost.llt1, config.txt under " << opt.out_dir
            << "\n";
  return kExitOk;
}

struct EvalOptions {
  std::string pred, gt, ignore;
};

// Unlabeled (pure black) truth pixels are excluded, mirroring datasets that
// black out regions without annotations.
int cmd_eval(const EvalOptions& opt) {
  const Grid<Rgb> pred_rgb = read_ppm8(opt.pred);
  const Grid<Rgb> gt_rgb = read_ppm8(opt.gt);
  if (pred_rgb.width != gt_rgb.width || pred_rgb.height != gt_rgb.height) {
    std::ostringstream os;
    os << "prediction is " << pred_rgb.width << "x" << pred_rgb.height << ", truth is "
       << gt_rgb.width << "x" << gt_rgb.height;
    throw std::runtime_error(os.str());
  }

  MaskImage ignore(gt_rgb.width, gt_rgb.height, 0);
  if (!opt.ignore.empty()) {
    const GrayImage mask = read_pgm8(opt.ignore);
    if (mask.width != gt_rgb.width || mask.height != gt_rgb.height) {
      throw std::runtime_error(opt.ignore + ": mask dimensions disagree with the label maps");
    }
    for (std::size_t i = 0; i < mask.cells.size(); ++i) {
      ignore.cells[i] = mask.cells[i] > 0.0f ? 1 : 0;
    }
  }

  const Rgb black{0, 0, 0};
  LabelMap pred(pred_rgb.width, pred_rgb.height);
  LabelMap gt(gt_rgb.width, gt_rgb.height);
  for (int y = 0; y < gt_rgb.height; ++y) {
    for (int x = 0; x < gt_rgb.width; ++x) {
      if (gt_rgb.at(x, y) == black) {
        ignore.at(x, y) = 1;
        continue;
      }
      const auto gt_label = label_from_color(gt_rgb.at(x, y));
      if (!gt_label) {
        std::ostringstream os;
        os << opt.gt << ": unknown color (" << int(gt_rgb.at(x, y).r) << ","
           << int(gt_rgb.at(x, y).g) << "," << int(gt_rgb.at(x, y).b) << ") at (" << x << "," << y
           << ")";
        throw std::runtime_error(os.str());
      }
      gt.at(x, y) = *gt_label;
    }
  }
  for (int y = 0; y < pred_rgb.height; ++y) {
    for (int x = 0; x < pred_rgb.width; ++x) {
      if (ignore.at(x, y) != 0) continue;
      const auto pred_label = label_from_color(pred_rgb.at(x, y));
      if (!pred_label) {
        std::ostringstream os;
        os << opt.pred << ": unknown color (" << int(pred_rgb.at(x, y).r) << ","
           << int(pred_rgb.at(x, y).g) << "," << int(pred_rgb.at(x, y).b) << ") at (" << x << ","
           << y << ")";
        throw std::runtime_error(os.str());
      }
      pred.at(x, y) = *pred_label;
    }
  }

  const IoUReport report = evaluate_labels(pred, gt, &ignore);
  std::cout << format_report_table(report) << format_report_keys(report);
  return kExitOk;
}

struct BenchOptions {
  std::string heights = "45,90,180,360";
  int width = 488;
  int disparities = 64;
  int repeats = 3;
  int patch = 11;
};

int cmd_bench(const BenchOptions& opt) {
  std::vector<int> heights;
  std::stringstream in(opt.heights);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      heights.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::runtime_error("bad height list entry: " + item);
    }
  }
  const ScalingReport report =
      run_scaling_bench(heights, opt.width, opt.disparities, opt.repeats, opt.patch);
  std::cout << format_scaling_report(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered street-scene labeling: joint per-column semantic labels and disparities"};
  app.require_subcommand(1);
  // "--h" is a scene-height option below, so help stays on "--help" only
  app.set_help_flag("--help", "print help");

  LabelOptions label_opt;
  CLI::App* label = app.add_subcommand("label", "Label a stereo pair or precomputed tensors");
  label->set_help_flag("--help", "print help");
  label->add_option("--left", label_opt.left, "left image (binary PGM)");
  label->add_option("--right", label_opt.right, "right image (binary PGM)");
  label->add_option("--scores", label_opt.scores, "per-pixel class scores (LLT1, 5 planes)");
  label->add_option("--cost", label_opt.cost, "precomputed cost volume (LLT1, D planes)");
  label->add_option("--config", label_opt.config, "engine config file")->required();
  label->add_option("--out-labels", label_opt.out_labels, "output label map (PPM)")->required();
  label->add_option("--out-disp", label_opt.out_disp, "output disparity map (16-bit PGM)")
      ->required();
  label->add_option("--threads", label_opt.threads, "worker cap, 0 = machine parallelism");

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "Verify the solver against exhaustive search");
  check->set_help_flag("--help", "print help");
  check->add_option("--seed", check_opt.seed, "random seed");
  check->add_option("--trials", check_opt.trials, "number of random instances");
  check->add_option("--max-h", check_opt.max_h, "maximum column height");
  check->add_option("--max-d", check_opt.max_d, "maximum disparity count");

  SynthOptions synth_opt;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic scene with ground truth");
  synth->set_help_flag("--help", "print help");
  synth->add_option("--seed", synth_opt.seed, "random seed");
  synth->add_option("--w", synth_opt.width, "scene width");
  synth->add_option("--h", synth_opt.height, "scene height");
  synth->add_option("--d", synth_opt.disparities, "disparity levels");
  synth->add_option("--noise-app", synth_opt.noise_app, "score noise magnitude");
  synth->add_option("--noise-depth", synth_opt.noise_depth, "matching-cost noise magnitude");
  synth->add_option("--out-dir", synth_opt.out_dir, "output directory")->required();

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "Per-class IoU between two label maps");
  eval->set_help_flag("--help", "print help");
  eval->add_option("--pred", eval_opt.pred, "predicted label map (PPM)")->required();
  eval->add_option("--gt", eval_opt.gt, "ground-truth label map (PPM)")->required();
  eval->add_option("--ignore", eval_opt.ignore, "mask (PGM); nonzero pixels are excluded");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "Stage timings and height-scaling fit");
  bench->set_help_flag("--help", "print help");
  bench->add_option("--heights", bench_opt.heights, "comma-separated height list");
  bench->add_option("--w", bench_opt.width, "scene width");
  bench->add_option("--d", bench_opt.disparities, "disparity levels");
  bench->add_option("--repeats", bench_opt.repeats, "repeats per height");
  bench->add_option("--patch", bench_opt.patch, "box filter patch size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (label->parsed()) {
      if (label_opt.cost.empty() && (label_opt.left.empty() || label_opt.right.empty())) {
        std::cerr << "error: either --cost or both --left and --right are required\n";
        return kExitUsage;
      }
      if (label_opt.scores.empty() && label_opt.left.empty()) {
        std::cerr << "error: the heuristic scorer needs --left; give --scores otherwise\n";
        return kExitUsage;
      }
      return cmd_label(label_opt);
    }
    if (check->parsed()) return cmd_check(check_opt);
    if (synth->parsed()) return cmd_synth(synth_opt);
    if (eval->parsed()) return cmd_eval(eval_opt);
    if (bench->parsed()) return cmd_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
