#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "layered/types.hpp"

namespace layered {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const Rgb&) const = default;
};

// Fixed palette for label maps written and read by the CLI.
//   Ground 128,64,128  Vehicle 0,0,142  Pedestrian 220,20,60
//   Building 70,70,70  Sky 70,130,180
Rgb label_color(Label label);
std::optional<Label> label_from_color(Rgb color);

// Binary PGM (P5), maxval <= 255; intensities come back normalized to [0,1].
GrayImage read_pgm8(const std::string& path);
void write_pgm8(const std::string& path, const GrayImage& image);

// Binary PGM (P5) with maxval 65535, big-endian samples.
Grid<std::uint16_t> read_pgm16(const std::string& path);
void write_pgm16(const std::string& path, const Grid<std::uint16_t>& image);

// Binary PPM (P6), maxval 255.
Grid<Rgb> read_ppm8(const std::string& path);
void write_ppm8(const std::string& path, const Grid<Rgb>& image);

void write_label_ppm(const std::string& path, const LabelMap& labels);

// Writes through a temporary file and renames, so failed runs never leave a
// partial artifact behind.
void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace layered
