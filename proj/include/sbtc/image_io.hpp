#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "sbtc/image.hpp"

namespace sbtc {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Netpbm binary formats: P6 (RGB) and P5 (gray, expanded to R == G == B).
// Only maxval 255 is accepted. Header comments ('#') are skipped.
RgbImage parse_pnm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const RgbImage& image);
std::vector<std::uint8_t> encode_pgm(const RgbImage& image);  // R plane

// PNG through libpng; any input flavour is converted to 8-bit RGB.
RgbImage parse_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const RgbImage& image, bool gray = false);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so a
// failure never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

// Dispatch on content signature (PNG magic / 'P5' / 'P6').
RgbImage read_image(const std::filesystem::path& path);

// .png -> PNG, anything else -> PPM (PGM when `gray`).
void write_image(const std::filesystem::path& path, const RgbImage& image, bool gray = false);

}  // namespace sbtc
