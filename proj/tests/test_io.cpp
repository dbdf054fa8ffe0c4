#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "layered/pnm_io.hpp"
#include "layered/tensor_io.hpp"
#include "support/test_util.hpp"

using namespace layered;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("layered_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("raw tensor round trip preserves bits") {
  TempDir dir;
  testutil::Rng rng(3);
  RawTensor tensor(5, 4, 3);
  for (float& v : tensor.values) v = static_cast<float>(rng.unit() * 2.0 - 1.0);
  tensor.values[0] = 0.0f;
  tensor.values[1] = 1.0f;
  tensor.values[2] = 1e-30f;

  const std::string path = dir.file("t.llt1");
  write_tensor(path, tensor);
  const RawTensor loaded = read_tensor(path);
  CHECK(loaded.width == 5);
  CHECK(loaded.height == 4);
  CHECK(loaded.channels == 3);
  CHECK(loaded.values == tensor.values);
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
}

TEST_CASE("raw tensor errors") {
  TempDir dir;
  SUBCASE("payload shorter than the header promises") {
    const std::string path = dir.file("short.llt1");
    std::ofstream out(path, std::ios::binary);
    out << "LLT1 4 4 2\n";
    out << "junk";
    out.close();
    CHECK_THROWS_WITH_AS(read_tensor(path), doctest::Contains("header promises"),
                         std::runtime_error);
  }
  SUBCASE("bad magic") {
    const std::string path = dir.file("bad.llt1");
    std::ofstream out(path, std::ios::binary);
    out << "NOPE 1 1 1\nxxxx";
    out.close();
    CHECK_THROWS_WITH_AS(read_tensor(path), doctest::Contains("LLT1"), std::runtime_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(read_tensor(dir.file("absent.llt1")), doctest::Contains("absent.llt1"),
                         std::runtime_error);
  }
}

TEST_CASE("score map tensors validate on load") {
  RawTensor tensor(2, 2, kLabelCount);
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 2; ++x) {
      for (int c = 0; c < kLabelCount; ++c) tensor.at(x, y, c) = 0.2f;
    }
  }
  CHECK_NOTHROW((void)score_map_from_tensor(tensor));

  SUBCASE("wrong channel count") {
    const RawTensor three(2, 2, 3);
    CHECK_THROWS_WITH_AS((void)score_map_from_tensor(three), doctest::Contains("channels"),
                         std::runtime_error);
  }
  SUBCASE("negative score names the pixel") {
    tensor.at(1, 0, 2) = -0.5f;
    CHECK_THROWS_WITH_AS((void)score_map_from_tensor(tensor), doctest::Contains("(1,0)"),
                         std::runtime_error);
  }
}

TEST_CASE("cost volume tensors reject negatives") {
  RawTensor tensor(2, 2, 4);
  tensor.at(0, 1, 2) = -1.0f;
  CHECK_THROWS_AS((void)cost_volume_from_tensor(tensor), std::runtime_error);
}

TEST_CASE("pgm8 round trip within quantization") {
  TempDir dir;
  testutil::Rng rng(7);
  GrayImage image(6, 5);
  for (float& v : image.cells) v = static_cast<float>(rng.unit());
  const std::string path = dir.file("img.pgm");
  write_pgm8(path, image);
  const GrayImage loaded = read_pgm8(path);
  REQUIRE(loaded.width == 6);
  REQUIRE(loaded.height == 5);
  for (std::size_t i = 0; i < image.cells.size(); ++i) {
    CHECK(loaded.cells[i] == doctest::Approx(image.cells[i]).epsilon(0.004));
  }
}

TEST_CASE("pgm headers may carry comments") {
  TempDir dir;
  const std::string path = dir.file("c.pgm");
  std::ofstream out(path, std::ios::binary);
  out << "P5\n# a comment\n2 1\n255\n";
  out.put(static_cast<char>(0));
  out.put(static_cast<char>(255));
  out.close();
  const GrayImage image = read_pgm8(path);
  CHECK(image.at(0, 0) == 0.0f);
  CHECK(image.at(1, 0) == 1.0f);
}

TEST_CASE("pgm16 round trip is exact and big-endian") {
  TempDir dir;
  Grid<std::uint16_t> image(3, 2);
  image.at(0, 0) = 0;
  image.at(1, 0) = 258;  // bytes 0x01 0x02
  image.at(2, 0) = 65535;
  image.at(0, 1) = 256;
  image.at(1, 1) = 1;
  image.at(2, 1) = 513;
  const std::string path = dir.file("d.pgm");
  write_pgm16(path, image);
  const Grid<std::uint16_t> loaded = read_pgm16(path);
  CHECK(loaded == image);

  std::ifstream in(path, std::ios::binary);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t payload = contents.find("65535\n") + 6;
  CHECK(static_cast<unsigned char>(contents[payload + 2]) == 0x01);
  CHECK(static_cast<unsigned char>(contents[payload + 3]) == 0x02);
}

TEST_CASE("label map colors round trip through ppm") {
  TempDir dir;
  LabelMap labels(kLabelCount, 2);
  for (int x = 0; x < kLabelCount; ++x) {
    labels.at(x, 0) = static_cast<Label>(x);
    labels.at(x, 1) = static_cast<Label>(kLabelCount - 1 - x);
  }
  const std::string path = dir.file("labels.ppm");
  write_label_ppm(path, labels);
  const Grid<Rgb> rgb = read_ppm8(path);
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < kLabelCount; ++x) {
      const auto decoded = label_from_color(rgb.at(x, y));
      REQUIRE(decoded.has_value());
      CHECK(*decoded == labels.at(x, y));
    }
  }
}

TEST_CASE("the palette carries the documented colors") {
  CHECK(label_color(Label::Ground) == Rgb{128, 64, 128});
  CHECK(label_color(Label::Vehicle) == Rgb{0, 0, 142});
  CHECK(label_color(Label::Pedestrian) == Rgb{220, 20, 60});
  CHECK(label_color(Label::Building) == Rgb{70, 70, 70});
  CHECK(label_color(Label::Sky) == Rgb{70, 130, 180});
  CHECK_FALSE(label_from_color(Rgb{1, 2, 3}).has_value());
}

TEST_CASE("image reads fail with the path in the message") {
  CHECK_THROWS_WITH_AS(read_pgm8("/nonexistent/image.pgm"),
                       doctest::Contains("/nonexistent/image.pgm"), std::runtime_error);
}
