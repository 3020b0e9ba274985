#pragma once

#include <cstdint>

#include "sbtc/grid.hpp"

namespace sbtc {

// Classic two-level BTC of a single-channel block.
struct GrayBlockCode {
  Bitmap bitmap;
  double mean = 0.0;  // block mean the bitmap was thresholded at
  double high = 0.0;  // mean of samples >= mean
  double low = 0.0;   // mean of samples < mean; equals `high` when that group is empty
};

// Bit is 1 iff sample >= block mean.
GrayBlockCode encode_gray_block(const SampleGrid& block);
GrayBlockCode encode_gray_block(const Grid<std::uint8_t>& block);

// high where the bit is set, low elsewhere; rounded and clamped to [0, 255].
Grid<std::uint8_t> decode_gray_block(const GrayBlockCode& code);

}  // namespace sbtc
