#pragma once

#include <cstddef>

#include "sbtc/grid.hpp"
#include "sbtc/image.hpp"
#include "sbtc/wplane.hpp"

namespace sbtc {

struct RefineResult {
  Bitmap final_bitmap;
  double initial_cost = 0.0;
  double final_cost = 0.0;
  std::size_t flips = 0;  // Hamming distance initial -> final
};

enum class Traversal { RowMajor, ColumnMajor };

// Sum over pixels of |x_ij - x_H|^2 for set bits and |x_ij - x_L|^2 for
// clear bits. Not normalized by block area.
double block_cost(const Block& block, const Bitmap& bitmap, const QuantPair& quant);

// block_cost(bitmap with bit (i, j) flipped) - block_cost(bitmap), in O(1).
double flip_delta(const Block& block, const Bitmap& bitmap, const QuantPair& quant,
                  int i, int j);

// Single hill-climbing pass: every bit of `initial` is tested once against
// the fixed `quant`, and flipped in the result iff flipping strictly lowers
// the cost. Each decision is made relative to `initial`, so the outcome is
// independent of visit order.
RefineResult refine_bitmap(const Block& block, const Bitmap& initial, const QuantPair& quant,
                           Traversal order = Traversal::RowMajor);

struct IteratedRefinement {
  Bitmap bitmap;
  QuantPair quant;
  std::size_t passes = 0;
};

// Alternates quantize_channels and refine_bitmap from `initial` until a pass
// makes no flips.
IteratedRefinement refine_to_fixpoint(const Block& block, const Bitmap& initial);

}  // namespace sbtc
