#pragma once

#include "sbtc/grid.hpp"
#include "sbtc/image.hpp"

namespace sbtc {

// The six per-channel quantization levels of one block. Kept in real
// arithmetic; rounding happens when a block is serialized.
struct QuantPair {
  double r_high = 0.0;
  double r_low = 0.0;
  double g_high = 0.0;
  double g_low = 0.0;
  double b_high = 0.0;
  double b_low = 0.0;

  Vec3 high() const noexcept { return {r_high, g_high, b_high}; }
  Vec3 low() const noexcept { return {r_low, g_low, b_low}; }

  friend bool operator==(const QuantPair&, const QuantPair&) = default;
};

// w_ij = (R + G + B) / 3, unrounded.
SampleGrid weighted_plane(const Block& block);

// Bit is 1 iff w_ij >= mean(w).
Bitmap initial_bitmap(const Block& block);

// Per channel: high = mean over 1-bits, low = mean over 0-bits. When one
// group is empty its level is set equal to the other group's.
QuantPair quantize_channels(const Block& block, const Bitmap& bitmap);

}  // namespace sbtc
