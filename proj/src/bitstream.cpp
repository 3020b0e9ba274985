#include "sbtc/bitstream.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sbtc {

namespace {

constexpr std::uint8_t kMagic[4] = {'S', 'B', 'T', 'C'};

std::size_t level_count(Scheme mode) noexcept { return mode == Scheme::GrayBtc ? 2 : 6; }

std::size_t bitmap_bytes(const StreamHeader& h) noexcept {
  return (static_cast<std::size_t>(h.block_rows) * h.block_cols + 7) / 8;
}

std::uint8_t checked_level(double v, std::size_t block) {
  const double r = std::nearbyint(v);
  if (!(r >= 0.0 && r <= 255.0)) {
    throw InternalError("block " + std::to_string(block) +
                        ": quantization level out of range: " + std::to_string(v));
  }
  return static_cast<std::uint8_t>(r);
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return std::uint32_t{b[at]} | std::uint32_t{b[at + 1]} << 8 |
         std::uint32_t{b[at + 2]} << 16 | std::uint32_t{b[at + 3]} << 24;
}

// Returns false on u64 overflow.
bool checked_stream_size(const StreamHeader& h, std::uint64_t& size) {
  const std::uint64_t br = (std::uint64_t{h.height} + h.block_rows - 1) / h.block_rows;
  const std::uint64_t bc = (std::uint64_t{h.width} + h.block_cols - 1) / h.block_cols;
  std::uint64_t blocks = 0;
  std::uint64_t payload = 0;
  if (__builtin_mul_overflow(br, bc, &blocks)) return false;
  if (__builtin_mul_overflow(blocks, std::uint64_t{record_size(h)}, &payload)) return false;
  if (__builtin_add_overflow(payload, std::uint64_t{kHeaderSize}, &size)) return false;
  return true;
}

}  // namespace

std::size_t record_size(const StreamHeader& header) noexcept {
  return bitmap_bytes(header) + level_count(header.mode);
}

std::uint64_t encoded_size(const StreamHeader& header) {
  if (header.block_rows == 0 || header.block_cols == 0) {
    throw InvalidInput("block dimensions must be at least 1");
  }
  std::uint64_t size = 0;
  if (!checked_stream_size(header, size)) throw InvalidInput("encoded size overflows");
  return size;
}

std::vector<std::uint8_t> serialize(const EncodedImage& image) {
  const StreamHeader& h = image.header;
  const std::uint64_t total = encoded_size(h);
  const std::size_t expected_blocks =
      block_count(h.width, h.height, h.block_shape());
  if (image.blocks.size() != expected_blocks) {
    throw InvalidInput("serialize: header implies " + std::to_string(expected_blocks) +
                       " blocks, got " + std::to_string(image.blocks.size()));
  }

  std::vector<std::uint8_t> out;
  out.reserve(total);
  for (std::uint8_t c : kMagic) out.push_back(c);
  out.push_back(kFormatVersion);
  out.push_back(static_cast<std::uint8_t>(h.mode));
  put_u32(out, h.width);
  put_u32(out, h.height);
  out.push_back(h.block_rows);
  out.push_back(h.block_cols);

  const std::size_t nbits = static_cast<std::size_t>(h.block_rows) * h.block_cols;
  for (std::size_t k = 0; k < image.blocks.size(); ++k) {
    const BlockCode& code = image.blocks[k];
    if (!code.bitmap.same_shape(h.block_rows, h.block_cols)) {
      throw InvalidInput("serialize: block " + std::to_string(k) + " bitmap has wrong shape");
    }
    std::uint8_t acc = 0;
    for (std::size_t bit = 0; bit < nbits; ++bit) {
      if (code.bitmap[bit]) acc |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      if (bit % 8 == 7) {
        out.push_back(acc);
        acc = 0;
      }
    }
    if (nbits % 8 != 0) out.push_back(acc);

    const QuantPair& q = code.quant;
    if (h.mode == Scheme::GrayBtc) {
      out.push_back(checked_level(q.r_high, k));
      out.push_back(checked_level(q.r_low, k));
    } else {
      for (double v : {q.r_high, q.r_low, q.g_high, q.g_low, q.b_high, q.b_low}) {
        out.push_back(checked_level(v, k));
      }
    }
  }
  return out;
}

EncodedImage deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) {
    throw FormatError("truncated header: expected " + std::to_string(kHeaderSize) +
                          " bytes, got " + std::to_string(bytes.size()),
                      bytes.size());
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (bytes[i] != kMagic[i]) throw FormatError("bad magic, not an .sbtc stream", i);
  }
  if (bytes[4] != kFormatVersion) {
    throw FormatError("unsupported version " + std::to_string(bytes[4]), 4);
  }
  if (bytes[5] > static_cast<std::uint8_t>(Scheme::Proposed)) {
    throw FormatError("unknown mode " + std::to_string(bytes[5]), 5);
  }

  EncodedImage image;
  StreamHeader& h = image.header;
  h.mode = static_cast<Scheme>(bytes[5]);
  h.width = get_u32(bytes, 6);
  h.height = get_u32(bytes, 10);
  h.block_rows = bytes[14];
  h.block_cols = bytes[15];
  if (h.block_rows == 0) throw FormatError("block rows must be at least 1", 14);
  if (h.block_cols == 0) throw FormatError("block cols must be at least 1", 15);

  std::uint64_t expected = 0;
  if (!checked_stream_size(h, expected)) {
    throw FormatError("declared dimensions overflow the stream size", 6);
  }
  if (expected != bytes.size()) {
    throw FormatError("stream length mismatch: expected " + std::to_string(expected) +
                          " bytes, got " + std::to_string(bytes.size()),
                      std::min<std::uint64_t>(expected, bytes.size()));
  }

  const std::size_t nblocks = block_count(h.width, h.height, h.block_shape());
  const std::size_t nbits = static_cast<std::size_t>(h.block_rows) * h.block_cols;
  const std::size_t map_bytes = bitmap_bytes(h);
  image.blocks.reserve(nblocks);
  std::size_t at = kHeaderSize;
  for (std::size_t k = 0; k < nblocks; ++k) {
    BlockCode code;
    code.bitmap = Bitmap(h.block_rows, h.block_cols);
    for (std::size_t bit = 0; bit < nbits; ++bit) {
      code.bitmap[bit] = (bytes[at + bit / 8] >> (7 - bit % 8)) & 1u;
    }
    if (nbits % 8 != 0) {
      const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFFu >> (nbits % 8));
      if (bytes[at + map_bytes - 1] & pad_mask) {
        throw FormatError("nonzero bitmap padding bits", at + map_bytes - 1);
      }
    }
    at += map_bytes;

    QuantPair& q = code.quant;
    if (h.mode == Scheme::GrayBtc) {
      q.r_high = q.g_high = q.b_high = bytes[at];
      q.r_low = q.g_low = q.b_low = bytes[at + 1];
      at += 2;
    } else {
      q = {double(bytes[at]),     double(bytes[at + 1]), double(bytes[at + 2]),
           double(bytes[at + 3]), double(bytes[at + 4]), double(bytes[at + 5])};
      at += 6;
    }
    image.blocks.push_back(std::move(code));
  }
  return image;
}

}  // namespace sbtc
