#include "sbtc/image.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace sbtc {

RgbImage::RgbImage(std::uint32_t width, std::uint32_t height)
    : width_(width), height_(height) {
  for (auto& p : planes_) p.assign(pixel_count(), 0);
}

RgbImage::RgbImage(std::uint32_t width, std::uint32_t height, std::vector<std::uint8_t> r,
                   std::vector<std::uint8_t> g, std::vector<std::uint8_t> b)
    : width_(width), height_(height), planes_{std::move(r), std::move(g), std::move(b)} {
  for (const auto& p : planes_) {
    if (p.size() != pixel_count()) {
      throw InvalidInput("plane size does not match width*height");
    }
  }
}

RgbImage RgbImage::from_interleaved(std::uint32_t width, std::uint32_t height,
                                    std::span<const std::uint8_t> rgb) {
  RgbImage img(width, height);
  if (rgb.size() != img.pixel_count() * 3) {
    throw InvalidInput("interleaved buffer size does not match width*height*3");
  }
  for (std::size_t k = 0; k < img.pixel_count(); ++k) {
    img.planes_[0][k] = rgb[3 * k];
    img.planes_[1][k] = rgb[3 * k + 1];
    img.planes_[2][k] = rgb[3 * k + 2];
  }
  return img;
}

std::vector<std::uint8_t> RgbImage::to_interleaved() const {
  std::vector<std::uint8_t> out(pixel_count() * 3);
  for (std::size_t k = 0; k < pixel_count(); ++k) {
    out[3 * k] = planes_[0][k];
    out[3 * k + 1] = planes_[1][k];
    out[3 * k + 2] = planes_[2][k];
  }
  return out;
}

bool RgbImage::is_gray() const noexcept {
  return planes_[0] == planes_[1] && planes_[1] == planes_[2];
}

BlockShape parse_block_shape(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvalidInput("bad block size '" + std::string(text) + "', expected MxN");
    }
    return v;
  };
  BlockShape shape;
  const auto sep = text.find_first_of("xX*");
  if (sep == std::string_view::npos) {
    shape.rows = shape.cols = parse_int(text);
  } else {
    shape.rows = parse_int(text.substr(0, sep));
    shape.cols = parse_int(text.substr(sep + 1));
  }
  if (shape.rows < 1 || shape.cols < 1) {
    throw InvalidInput("block dimensions must be at least 1");
  }
  return shape;
}

std::size_t block_count(std::uint32_t width, std::uint32_t height, BlockShape shape) {
  const std::size_t br = (static_cast<std::size_t>(height) + shape.rows - 1) / shape.rows;
  const std::size_t bc = (static_cast<std::size_t>(width) + shape.cols - 1) / shape.cols;
  return br * bc;
}

BlockGrid partition(const RgbImage& image, BlockShape shape) {
  if (image.empty()) throw InvalidInput("cannot partition an empty image");
  if (shape.rows < 1 || shape.cols < 1) {
    throw InvalidInput("block dimensions must be at least 1");
  }

  BlockGrid grid;
  grid.shape = shape;
  grid.width = image.width();
  grid.height = image.height();
  grid.block_rows = (image.height() + static_cast<std::size_t>(shape.rows) - 1) / shape.rows;
  grid.block_cols = (image.width() + static_cast<std::size_t>(shape.cols) - 1) / shape.cols;
  grid.pad_bottom =
      static_cast<std::uint32_t>(grid.block_rows * shape.rows - image.height());
  grid.pad_right =
      static_cast<std::uint32_t>(grid.block_cols * shape.cols - image.width());

  const std::size_t last_row = image.height() - 1;
  const std::size_t last_col = image.width() - 1;
  grid.blocks.reserve(grid.block_rows * grid.block_cols);
  for (std::size_t br = 0; br < grid.block_rows; ++br) {
    for (std::size_t bc = 0; bc < grid.block_cols; ++bc) {
      Block block;
      block.origin_row = br * shape.rows;
      block.origin_col = bc * shape.cols;
      block.pixels = PixelGrid(shape.rows, shape.cols);
      for (int i = 0; i < shape.rows; ++i) {
        const std::size_t y = std::min(block.origin_row + i, last_row);
        for (int j = 0; j < shape.cols; ++j) {
          const std::size_t x = std::min(block.origin_col + j, last_col);
          block.pixels.at(i, j) = image.pixel(y, x);
        }
      }
      grid.blocks.push_back(std::move(block));
    }
  }
  return grid;
}

RgbImage reassemble(const BlockGrid& grid, std::span<const PixelGrid> blocks) {
  if (blocks.size() != grid.blocks.size()) {
    throw InvalidInput("reassemble: expected " + std::to_string(grid.blocks.size()) +
                       " blocks, got " + std::to_string(blocks.size()));
  }
  RgbImage image(grid.width, grid.height);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const PixelGrid& px = blocks[k];
    if (!px.same_shape(grid.shape.rows, grid.shape.cols)) {
      throw InvalidInput("reassemble: block " + std::to_string(k) + " has wrong shape");
    }
    const Block& slot = grid.blocks[k];
    for (int i = 0; i < px.rows(); ++i) {
      const std::size_t y = slot.origin_row + i;
      if (y >= grid.height) break;
      for (int j = 0; j < px.cols(); ++j) {
        const std::size_t x = slot.origin_col + j;
        if (x >= grid.width) break;
        image.set_pixel(y, x, px.at(i, j));
      }
    }
  }
  return image;
}

RgbImage reassemble(const BlockGrid& grid) {
  std::vector<PixelGrid> pixels;
  pixels.reserve(grid.blocks.size());
  for (const auto& b : grid.blocks) pixels.push_back(b.pixels);
  return reassemble(grid, pixels);
}

}  // namespace sbtc
