#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace sbtc {

// Nearest integer, ties to even (the default FP rounding mode), clamped to
// the 8-bit sample range.
inline std::uint8_t round_level(double v) noexcept {
  if (!(v > 0.0)) return 0;  // also catches NaN
  return static_cast<std::uint8_t>(std::min(std::nearbyint(v), 255.0));
}

}  // namespace sbtc
