#include "sbtc/btc_gray.hpp"

#include "sbtc/rounding.hpp"

namespace sbtc {

GrayBlockCode encode_gray_block(const SampleGrid& block) {
  if (block.size() == 0) throw InvalidInput("empty gray block");

  double sum = 0.0;
  for (double v : block) sum += v;
  GrayBlockCode code;
  code.mean = sum / static_cast<double>(block.size());
  code.bitmap = Bitmap(block.rows(), block.cols());

  double high_sum = 0.0;
  double low_sum = 0.0;
  std::size_t q = 0;
  for (std::size_t k = 0; k < block.size(); ++k) {
    if (block[k] >= code.mean) {
      code.bitmap[k] = 1;
      high_sum += block[k];
      ++q;
    } else {
      low_sum += block[k];
    }
  }
  // q >= 1 always: the maximum sample is never below the mean.
  code.high = high_sum / static_cast<double>(q);
  code.low = q == block.size() ? code.high
                               : low_sum / static_cast<double>(block.size() - q);
  return code;
}

GrayBlockCode encode_gray_block(const Grid<std::uint8_t>& block) {
  std::vector<double> samples(block.begin(), block.end());
  return encode_gray_block(SampleGrid(block.rows(), block.cols(), std::move(samples)));
}

Grid<std::uint8_t> decode_gray_block(const GrayBlockCode& code) {
  const std::uint8_t hi = round_level(code.high);
  const std::uint8_t lo = round_level(code.low);
  Grid<std::uint8_t> out(code.bitmap.rows(), code.bitmap.cols());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = code.bitmap[k] ? hi : lo;
  return out;
}

}  // namespace sbtc
