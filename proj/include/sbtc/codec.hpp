#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sbtc/bitstream.hpp"
#include "sbtc/image.hpp"

namespace sbtc {

struct EncodeOptions {
  BlockShape block{4, 4};
  Scheme scheme = Scheme::Proposed;
  // nullopt: SBTC_THREADS or hardware; 0: hardware; N: exactly N workers.
  std::optional<std::size_t> threads;
  // Re-quantize and refine until no bit flips (Proposed only).
  bool iterate = false;
};

std::string_view scheme_name(Scheme s) noexcept;
Scheme parse_scheme(std::string_view name);

// Per-block encoders. Levels in the returned code are already rounded to
// the integers that serialization will store.
BlockCode encode_block_gray(const Block& block);
BlockCode encode_block_wplane(const Block& block);
BlockCode encode_block_proposed(const Block& block, bool iterate = false);

// Gray conversion used by GrayBtc mode: round((R + G + B) / 3).
RgbImage to_gray(const RgbImage& image);

EncodedImage encode_image(const RgbImage& image, const EncodeOptions& options = {});

// Grayscale streams decode to R == G == B.
RgbImage decode_image(const EncodedImage& encoded);

}  // namespace sbtc
