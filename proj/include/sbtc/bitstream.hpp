#pragma once

// `.sbtc` layout (all multi-byte integers little-endian):
//
//   offset size  field
//   0      4     magic "SBTC"
//   4      1     version (1)
//   5      1     mode: 0 grayscale BTC, 1 W-plane, 2 W-plane + hill climbing
//   6      4     width  (u32)
//   10     4     height (u32)
//   14     1     block rows m (u8, >= 1)
//   15     1     block cols n (u8, >= 1)
//   16     ...   ceil(height/m) * ceil(width/n) records, row-major block order
//
// Record: ceil(m*n/8) bitmap bytes (row-major bits, MSB first, zero padded),
// then the levels as unsigned bytes: color modes r_high r_low g_high g_low
// b_high b_low; grayscale mode high low.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sbtc/grid.hpp"
#include "sbtc/image.hpp"
#include "sbtc/wplane.hpp"

namespace sbtc {

enum class Scheme : std::uint8_t {
  GrayBtc = 0,
  WPlane = 1,
  Proposed = 2,  // W-plane + hill-climbing refinement
};

inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 16;

struct StreamHeader {
  Scheme mode = Scheme::Proposed;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t block_rows = 4;
  std::uint8_t block_cols = 4;

  BlockShape block_shape() const noexcept { return {block_rows, block_cols}; }
  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

// One block's payload. In grayscale mode only r_high / r_low are stored;
// deserialization mirrors them into the G and B levels.
struct BlockCode {
  Bitmap bitmap;
  QuantPair quant;

  friend bool operator==(const BlockCode&, const BlockCode&) = default;
};

struct EncodedImage {
  StreamHeader header;
  std::vector<BlockCode> blocks;

  friend bool operator==(const EncodedImage&, const EncodedImage&) = default;
};

std::size_t record_size(const StreamHeader& header) noexcept;

// Exact byte length of a stream with this header.
std::uint64_t encoded_size(const StreamHeader& header);

// Levels are rounded to nearest (ties to even); a level outside [0, 255]
// after rounding raises InternalError.
std::vector<std::uint8_t> serialize(const EncodedImage& image);

// Rejects bad magic/version/mode, zero block dimensions, length mismatch
// (checked before any allocation) and nonzero bitmap padding bits.
EncodedImage deserialize(std::span<const std::uint8_t> bytes);

}  // namespace sbtc
