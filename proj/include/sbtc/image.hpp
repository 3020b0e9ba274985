#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sbtc/grid.hpp"

namespace sbtc {

enum class Channel : int { R = 0, G = 1, B = 2 };

// Planar 8-bit RGB image. All three planes always hold width*height samples.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(std::uint32_t width, std::uint32_t height);
  RgbImage(std::uint32_t width, std::uint32_t height, std::vector<std::uint8_t> r,
           std::vector<std::uint8_t> g, std::vector<std::uint8_t> b);

  // Interleaved RGBRGB... input, row-major.
  static RgbImage from_interleaved(std::uint32_t width, std::uint32_t height,
                                   std::span<const std::uint8_t> rgb);
  std::vector<std::uint8_t> to_interleaved() const;

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  bool empty() const noexcept { return width_ == 0 || height_ == 0; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * height_;
  }

  const std::vector<std::uint8_t>& plane(Channel c) const noexcept {
    return planes_[static_cast<int>(c)];
  }

  Pixel pixel(std::size_t row, std::size_t col) const noexcept {
    const std::size_t k = row * width_ + col;
    return {planes_[0][k], planes_[1][k], planes_[2][k]};
  }
  void set_pixel(std::size_t row, std::size_t col, const Pixel& p) noexcept {
    const std::size_t k = row * width_ + col;
    planes_[0][k] = p[0];
    planes_[1][k] = p[1];
    planes_[2][k] = p[2];
  }

  // True when R == G == B everywhere.
  bool is_gray() const noexcept;

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  std::vector<std::uint8_t> planes_[3];
};

struct BlockShape {
  int rows = 4;
  int cols = 4;

  std::size_t area() const noexcept {
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

// Parses "MxN" (also accepts "M*N" / a single "M" for square blocks).
BlockShape parse_block_shape(std::string_view text);

// One m x n tile plus its origin in (padded) image coordinates.
struct Block {
  std::size_t origin_row = 0;
  std::size_t origin_col = 0;
  PixelGrid pixels;

  int rows() const noexcept { return pixels.rows(); }
  int cols() const noexcept { return pixels.cols(); }
  const Pixel& at(int i, int j) const { return pixels.at(i, j); }
};

struct BlockGrid {
  std::vector<Block> blocks;  // row-major over the block grid
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  BlockShape shape;
  std::uint32_t width = 0;   // source image, before padding
  std::uint32_t height = 0;
  std::uint32_t pad_right = 0;
  std::uint32_t pad_bottom = 0;

  std::size_t block_count() const noexcept { return blocks.size(); }
};

// ceil(height/m) * ceil(width/n).
std::size_t block_count(std::uint32_t width, std::uint32_t height, BlockShape shape);

// Splits the image into nonoverlapping row-major tiles. Edges that do not
// fill a whole tile are padded by replicating the last row/column.
BlockGrid partition(const RgbImage& image, BlockShape shape);

// Places each grid at its block's origin and crops the padding.
RgbImage reassemble(const BlockGrid& grid, std::span<const PixelGrid> blocks);
RgbImage reassemble(const BlockGrid& grid);

}  // namespace sbtc
