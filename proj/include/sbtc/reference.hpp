#pragma once

#include <optional>
#include <string_view>

namespace sbtc {

// Published MSE figures for the common test images, W-plane vs W-plane +
// hill climbing, at 4x4 and 8x8 blocks. They were computed on uint8 arrays
// without widening (compare with saturated_mse, not color_mse).
struct ReferenceMse {
  std::string_view image;
  int block;  // square block edge
  double wplane;
  double proposed;
};

inline constexpr ReferenceMse kReferenceMse[] = {
    {"pepper", 4, 11.1420, 10.4734},   {"fruits", 4, 19.5508, 16.8978},
    {"baboon", 4, 95.9592, 90.7861},   {"tiffany", 4, 19.2256, 12.7837},
    {"lenna", 4, 19.9605, 18.7425},    {"frymire", 4, 254.1143, 213.5586},
    {"pepper", 8, 32.8668, 29.8284},   {"fruits", 8, 35.9711, 30.6846},
    {"baboon", 8, 145.6842, 135.5584}, {"tiffany", 8, 31.7653, 22.9964},
    {"lenna", 8, 38.6159, 35.6684},    {"frymire", 8, 468.8183, 394.8452},
};

// Maps a file stem to a reference image key ("lena" -> "lenna",
// "peppers" -> "pepper", "mandrill" -> "baboon"); nullopt if unknown.
std::optional<std::string_view> reference_key(std::string_view stem);

std::optional<ReferenceMse> find_reference(std::string_view stem, int block_rows, int block_cols);

}  // namespace sbtc
