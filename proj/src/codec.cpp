#include "sbtc/codec.hpp"

#include <cmath>
#include <limits>

#include "sbtc/btc_gray.hpp"
#include "sbtc/parallel.hpp"
#include "sbtc/reconstruct.hpp"
#include "sbtc/refine.hpp"
#include "sbtc/rounding.hpp"
#include "sbtc/wplane.hpp"

namespace sbtc {

namespace {

QuantPair rounded(const QuantPair& q) {
  return {double(round_level(q.r_high)), double(round_level(q.r_low)),
          double(round_level(q.g_high)), double(round_level(q.g_low)),
          double(round_level(q.b_high)), double(round_level(q.b_low))};
}

}  // namespace

std::string_view scheme_name(Scheme s) noexcept {
  switch (s) {
    case Scheme::GrayBtc: return "btc-gray";
    case Scheme::WPlane: return "wplane";
    case Scheme::Proposed: return "proposed";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "btc-gray" || name == "gray") return Scheme::GrayBtc;
  if (name == "wplane") return Scheme::WPlane;
  if (name == "proposed" || name == "hill-climbing") return Scheme::Proposed;
  throw InvalidInput("unknown scheme '" + std::string(name) +
                     "' (expected btc-gray, wplane or proposed)");
}

BlockCode encode_block_gray(const Block& block) {
  Grid<std::uint8_t> samples(block.rows(), block.cols());
  for (std::size_t k = 0; k < samples.size(); ++k) samples[k] = block.pixels[k][0];
  GrayBlockCode g = encode_gray_block(samples);
  const double hi = round_level(g.high);
  const double lo = round_level(g.low);
  return {std::move(g.bitmap), QuantPair{hi, lo, hi, lo, hi, lo}};
}

BlockCode encode_block_wplane(const Block& block) {
  Bitmap bits = initial_bitmap(block);
  QuantPair q = quantize_channels(block, bits);
  return {std::move(bits), rounded(q)};
}

BlockCode encode_block_proposed(const Block& block, bool iterate) {
  Bitmap initial = initial_bitmap(block);
  if (iterate) {
    IteratedRefinement r = refine_to_fixpoint(block, initial);
    return {std::move(r.bitmap), rounded(r.quant)};
  }
  const QuantPair initial_quant = quantize_channels(block, initial);
  RefineResult r = refine_bitmap(block, initial, initial_quant);
  QuantPair q = final_quantize(block, r.final_bitmap);
  return {std::move(r.final_bitmap), rounded(q)};
}

RgbImage to_gray(const RgbImage& image) {
  std::vector<std::uint8_t> g(image.pixel_count());
  const auto& r = image.plane(Channel::R);
  const auto& gg = image.plane(Channel::G);
  const auto& b = image.plane(Channel::B);
  for (std::size_t k = 0; k < g.size(); ++k) {
    g[k] = round_level((double(r[k]) + gg[k] + b[k]) / 3.0);
  }
  return RgbImage(image.width(), image.height(), g, g, g);
}

EncodedImage encode_image(const RgbImage& image, const EncodeOptions& options) {
  constexpr int kMaxDim = std::numeric_limits<std::uint8_t>::max();
  if (options.block.rows < 1 || options.block.cols < 1 || options.block.rows > kMaxDim ||
      options.block.cols > kMaxDim) {
    throw InvalidInput("block dimensions must be within 1..255");
  }

  const bool gray = options.scheme == Scheme::GrayBtc;
  const BlockGrid grid = partition(gray ? to_gray(image) : image, options.block);
  const ExecPlan exec = plan(grid.block_count(), resolve_worker_count(options.threads));

  EncodedImage out;
  out.header = {options.scheme, image.width(), image.height(),
                static_cast<std::uint8_t>(options.block.rows),
                static_cast<std::uint8_t>(options.block.cols)};
  switch (options.scheme) {
    case Scheme::GrayBtc:
      out.blocks = encode_parallel(grid.blocks, encode_block_gray, exec);
      break;
    case Scheme::WPlane:
      out.blocks = encode_parallel(grid.blocks, encode_block_wplane, exec);
      break;
    case Scheme::Proposed:
      out.blocks = encode_parallel(
          grid.blocks,
          [iterate = options.iterate](const Block& b) { return encode_block_proposed(b, iterate); },
          exec);
      break;
  }
  return out;
}

RgbImage decode_image(const EncodedImage& encoded) {
  const StreamHeader& h = encoded.header;
  if (encoded.blocks.size() != block_count(h.width, h.height, h.block_shape())) {
    throw InvalidInput("block count does not match header dimensions");
  }
  if (h.width == 0 || h.height == 0) return RgbImage(h.width, h.height);

  // A grid of slots only; pixel content is not needed to place blocks.
  BlockGrid grid;
  grid.shape = h.block_shape();
  grid.width = h.width;
  grid.height = h.height;
  grid.block_rows = (std::size_t{h.height} + h.block_rows - 1) / h.block_rows;
  grid.block_cols = (std::size_t{h.width} + h.block_cols - 1) / h.block_cols;
  grid.blocks.resize(encoded.blocks.size());
  std::vector<PixelGrid> pixels;
  pixels.reserve(encoded.blocks.size());
  for (std::size_t k = 0; k < encoded.blocks.size(); ++k) {
    grid.blocks[k].origin_row = (k / grid.block_cols) * h.block_rows;
    grid.blocks[k].origin_col = (k % grid.block_cols) * h.block_cols;
    const BlockCode& code = encoded.blocks[k];
    if (!code.bitmap.same_shape(h.block_rows, h.block_cols)) {
      throw InvalidInput("block " + std::to_string(k) + " bitmap has wrong shape");
    }
    pixels.push_back(reconstruct_block(code.bitmap, code.quant));
  }
  return reassemble(grid, pixels);
}

}  // namespace sbtc
