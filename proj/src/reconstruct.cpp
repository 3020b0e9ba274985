#include "sbtc/reconstruct.hpp"

#include "sbtc/rounding.hpp"

namespace sbtc {

QuantPair final_quantize(const Block& block, const Bitmap& final_bitmap) {
  return quantize_channels(block, final_bitmap);
}

PixelGrid reconstruct_block(const Bitmap& bitmap, const QuantPair& quant) {
  const Pixel high{round_level(quant.r_high), round_level(quant.g_high),
                   round_level(quant.b_high)};
  const Pixel low{round_level(quant.r_low), round_level(quant.g_low),
                  round_level(quant.b_low)};
  PixelGrid out(bitmap.rows(), bitmap.cols());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = bitmap[k] ? high : low;
  return out;
}

}  // namespace sbtc
