#include "layered/pnm_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace layered {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// PNM header tokens, skipping whitespace and '#' comment lines.
class HeaderParser {
 public:
  HeaderParser(const std::string& data, const std::string& path) : data_(data), path_(path) {}

  std::string token() {
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    const std::size_t begin = pos_;
    while (pos_ < data_.size() && !std::isspace(static_cast<unsigned char>(data_[pos_]))) ++pos_;
    if (begin == pos_) fail(path_, "truncated header");
    return data_.substr(begin, pos_ - begin);
  }

  int number() {
    const std::string t = token();
    try {
      return std::stoi(t);
    } catch (const std::exception&) {
      fail(path_, "bad header number: " + t);
    }
  }

  // Payload starts after the single whitespace byte that ends the header.
  std::size_t payload_offset() const { return pos_ + 1; }

 private:
  const std::string& data_;
  std::string path_;
  std::size_t pos_ = 0;
};

struct PnmHeader {
  int width = 0;
  int height = 0;
  int maxval = 0;
  std::size_t payload = 0;
};

PnmHeader parse_header(const std::string& data, const std::string& path, const char* magic) {
  HeaderParser parser(data, path);
  const std::string found = parser.token();
  if (found != magic) fail(path, std::string("expected ") + magic + " header, found " + found);
  PnmHeader header;
  header.width = parser.number();
  header.height = parser.number();
  header.maxval = parser.number();
  header.payload = parser.payload_offset();
  if (header.width < 1 || header.height < 1) fail(path, "bad dimensions");
  return header;
}

void check_payload(const std::string& data, const PnmHeader& header, std::size_t expected,
                   const std::string& path) {
  if (data.size() < header.payload || data.size() - header.payload < expected) {
    fail(path, "payload shorter than the header promises");
  }
}

}  // namespace

Rgb label_color(Label label) {
  switch (label) {
    case Label::Ground:
      return {128, 64, 128};
    case Label::Vehicle:
      return {0, 0, 142};
    case Label::Pedestrian:
      return {220, 20, 60};
    case Label::Building:
      return {70, 70, 70};
    case Label::Sky:
      return {70, 130, 180};
  }
  return {0, 0, 0};
}

std::optional<Label> label_from_color(Rgb color) {
  for (int l = 0; l < kLabelCount; ++l) {
    if (label_color(static_cast<Label>(l)) == color) return static_cast<Label>(l);
  }
  return std::nullopt;
}

GrayImage read_pgm8(const std::string& path) {
  const std::string data = read_all(path);
  const PnmHeader header = parse_header(data, path, "P5");
  if (header.maxval < 1 || header.maxval > 255) fail(path, "expected 8-bit PGM");
  const std::size_t count = static_cast<std::size_t>(header.width) * header.height;
  check_payload(data, header, count, path);
  GrayImage image(header.width, header.height);
  for (std::size_t i = 0; i < count; ++i) {
    image.cells[i] = static_cast<float>(static_cast<unsigned char>(data[header.payload + i])) /
                     static_cast<float>(header.maxval);
  }
  return image;
}

void write_pgm8(const std::string& path, const GrayImage& image) {
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.reserve(out.size() + image.cells.size());
  for (const float v : image.cells) {
    const int q = static_cast<int>(v * 255.0f + 0.5f);
    out.push_back(static_cast<char>(std::clamp(q, 0, 255)));
  }
  write_file_atomic(path, out);
}

Grid<std::uint16_t> read_pgm16(const std::string& path) {
  const std::string data = read_all(path);
  const PnmHeader header = parse_header(data, path, "P5");
  if (header.maxval != 65535) fail(path, "expected 16-bit PGM with maxval 65535");
  const std::size_t count = static_cast<std::size_t>(header.width) * header.height;
  check_payload(data, header, count * 2, path);
  Grid<std::uint16_t> image(header.width, header.height);
  for (std::size_t i = 0; i < count; ++i) {
    const auto hi = static_cast<unsigned char>(data[header.payload + 2 * i]);
    const auto lo = static_cast<unsigned char>(data[header.payload + 2 * i + 1]);
    image.cells[i] = static_cast<std::uint16_t>((hi << 8) | lo);
  }
  return image;
}

void write_pgm16(const std::string& path, const Grid<std::uint16_t>& image) {
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n65535\n";
  out.reserve(out.size() + image.cells.size() * 2);
  for (const std::uint16_t v : image.cells) {
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v & 0xff));
  }
  write_file_atomic(path, out);
}

Grid<Rgb> read_ppm8(const std::string& path) {
  const std::string data = read_all(path);
  const PnmHeader header = parse_header(data, path, "P6");
  if (header.maxval != 255) fail(path, "expected 8-bit PPM");
  const std::size_t count = static_cast<std::size_t>(header.width) * header.height;
  check_payload(data, header, count * 3, path);
  Grid<Rgb> image(header.width, header.height);
  for (std::size_t i = 0; i < count; ++i) {
    image.cells[i] = {static_cast<std::uint8_t>(data[header.payload + 3 * i]),
                      static_cast<std::uint8_t>(data[header.payload + 3 * i + 1]),
                      static_cast<std::uint8_t>(data[header.payload + 3 * i + 2])};
  }
  return image;
}

void write_ppm8(const std::string& path, const Grid<Rgb>& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.reserve(out.size() + image.cells.size() * 3);
  for (const Rgb& c : image.cells) {
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  write_file_atomic(path, out);
}

void write_label_ppm(const std::string& path, const LabelMap& labels) {
  Grid<Rgb> image(labels.width, labels.height);
  for (std::size_t i = 0; i < labels.cells.size(); ++i) {
    image.cells[i] = label_color(labels.cells[i]);
  }
  write_ppm8(path, image);
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(tmp, "cannot open file for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(tmp, "write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(path, "rename failed: " + ec.message());
  }
}

}  // namespace layered
