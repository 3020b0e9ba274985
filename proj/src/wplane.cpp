#include "sbtc/wplane.hpp"

namespace sbtc {

SampleGrid weighted_plane(const Block& block) {
  SampleGrid w(block.rows(), block.cols());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Pixel& p = block.pixels[k];
    w[k] = (static_cast<double>(p[0]) + p[1] + p[2]) / 3.0;
  }
  return w;
}

Bitmap initial_bitmap(const Block& block) {
  // w_ij >= mean(w)  <=>  area * (R+G+B)_ij >= sum(R+G+B), exact in integers.
  const std::size_t area = block.pixels.size();
  std::uint64_t total = 0;
  for (const Pixel& p : block.pixels) total += std::uint64_t{p[0]} + p[1] + p[2];
  Bitmap bits(block.rows(), block.cols());
  for (std::size_t k = 0; k < area; ++k) {
    const Pixel& p = block.pixels[k];
    bits[k] = area * (std::uint64_t{p[0]} + p[1] + p[2]) >= total ? 1 : 0;
  }
  return bits;
}

QuantPair quantize_channels(const Block& block, const Bitmap& bitmap) {
  if (!bitmap.same_shape(block.pixels)) {
    throw InvalidInput("bitmap shape does not match block shape");
  }
  Vec3 high_sum{};
  Vec3 low_sum{};
  std::size_t q = 0;
  for (std::size_t k = 0; k < bitmap.size(); ++k) {
    const Pixel& p = block.pixels[k];
    Vec3& acc = bitmap[k] ? high_sum : low_sum;
    for (int c = 0; c < 3; ++c) acc[c] += p[c];
    q += bitmap[k] != 0;
  }
  const std::size_t n = bitmap.size();

  Vec3 high{};
  Vec3 low{};
  for (int c = 0; c < 3; ++c) {
    if (q > 0) high[c] = high_sum[c] / static_cast<double>(q);
    if (q < n) low[c] = low_sum[c] / static_cast<double>(n - q);
    if (q == 0) high[c] = low[c];
    if (q == n) low[c] = high[c];
  }
  return {high[0], low[0], high[1], low[1], high[2], low[2]};
}

}  // namespace sbtc
