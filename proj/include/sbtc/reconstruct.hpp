#pragma once

#include "sbtc/grid.hpp"
#include "sbtc/image.hpp"
#include "sbtc/wplane.hpp"

namespace sbtc {

// Levels recomputed from the final bitmap; same rule as quantize_channels.
QuantPair final_quantize(const Block& block, const Bitmap& final_bitmap);

// Per channel: high level where the bit is set, low level elsewhere, each
// rounded to the nearest integer (ties to even) and clamped to [0, 255].
PixelGrid reconstruct_block(const Bitmap& bitmap, const QuantPair& quant);

}  // namespace sbtc
