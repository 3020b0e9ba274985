#include "sbtc/refine.hpp"

namespace sbtc {

namespace {

double squared_distance(const Pixel& p, const Vec3& v) noexcept {
  double d = 0.0;
  for (int c = 0; c < 3; ++c) {
    const double e = static_cast<double>(p[c]) - v[c];
    d += e * e;
  }
  return d;
}

void check_shapes(const Block& block, const Bitmap& bitmap) {
  if (!bitmap.same_shape(block.pixels)) {
    throw InvalidInput("bitmap shape does not match block shape");
  }
}

// Strict decrease required; also bounds the loop if rounding ever made the
// cost sequence stall.
constexpr std::size_t kMaxFixpointPasses = 256;

}  // namespace

double block_cost(const Block& block, const Bitmap& bitmap, const QuantPair& quant) {
  check_shapes(block, bitmap);
  const Vec3 high = quant.high();
  const Vec3 low = quant.low();
  double cost = 0.0;
  for (std::size_t k = 0; k < bitmap.size(); ++k) {
    cost += squared_distance(block.pixels[k], bitmap[k] ? high : low);
  }
  return cost;
}

double flip_delta(const Block& block, const Bitmap& bitmap, const QuantPair& quant, int i,
                  int j) {
  check_shapes(block, bitmap);
  if (i < 0 || j < 0 || i >= bitmap.rows() || j >= bitmap.cols()) {
    throw InvalidInput("flip position out of range");
  }
  const Pixel& x = block.at(i, j);
  const bool set = bitmap.bit(i, j);
  const Vec3 current = set ? quant.high() : quant.low();
  const Vec3 other = set ? quant.low() : quant.high();
  return squared_distance(x, other) - squared_distance(x, current);
}

RefineResult refine_bitmap(const Block& block, const Bitmap& initial, const QuantPair& quant,
                           Traversal order) {
  check_shapes(block, initial);
  RefineResult result;
  result.initial_cost = block_cost(block, initial, quant);
  result.final_bitmap = initial;

  auto visit = [&](int i, int j) {
    if (flip_delta(block, initial, quant, i, j) < 0.0) {
      result.final_bitmap.set(i, j, !initial.bit(i, j));
      ++result.flips;
    }
  };
  if (order == Traversal::RowMajor) {
    for (int i = 0; i < initial.rows(); ++i)
      for (int j = 0; j < initial.cols(); ++j) visit(i, j);
  } else {
    for (int j = 0; j < initial.cols(); ++j)
      for (int i = 0; i < initial.rows(); ++i) visit(i, j);
  }

  result.final_cost = block_cost(block, result.final_bitmap, quant);
  return result;
}

IteratedRefinement refine_to_fixpoint(const Block& block, const Bitmap& initial) {
  IteratedRefinement state{initial, quantize_channels(block, initial), 0};
  while (state.passes < kMaxFixpointPasses) {
    RefineResult r = refine_bitmap(block, state.bitmap, state.quant);
    ++state.passes;
    if (r.flips == 0) break;
    state.bitmap = std::move(r.final_bitmap);
    state.quant = quantize_channels(block, state.bitmap);
  }
  return state;
}

}  // namespace sbtc
