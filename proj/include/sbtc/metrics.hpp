#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "sbtc/image.hpp"

namespace sbtc {

// Stabilizing constants for 8-bit data: (0.01 L)^2 and (0.03 L)^2, L = 255.
inline constexpr double kSsimC1 = (0.01 * 255.0) * (0.01 * 255.0);
inline constexpr double kSsimC2 = (0.03 * 255.0) * (0.03 * 255.0);
inline constexpr int kSsimWindow = 8;

enum class SsimMode {
  Windowed,  // 8x8 non-overlapping windows, area-weighted mean
  Global,    // one window spanning the whole image
};

struct QualityReport {
  double mse = 0.0;
  double ssim = 1.0;
  std::array<double, 3> per_channel_mse{};
};

// Mean over pixels of ((dR^2 + dG^2 + dB^2) / 3).
double color_mse(const RgbImage& original, const RgbImage& reconstructed);
std::array<double, 3> channel_mse(const RgbImage& original, const RgbImage& reconstructed);

// Same average as color_mse, but each difference is taken as
// max(original - reconstructed, 0), i.e. what unsigned 8-bit subtraction
// without widening produces. Useful only for comparing against numbers that
// were computed that way.
double saturated_mse(const RgbImage& original, const RgbImage& reconstructed);

// Per-channel SSIM averaged with equal weights over R, G, B.
double ssim(const RgbImage& original, const RgbImage& reconstructed,
            SsimMode mode = SsimMode::Windowed);

QualityReport quality_report(const RgbImage& original, const RgbImage& reconstructed,
                             SsimMode mode = SsimMode::Windowed);

// One benchmark/report row. CSV column order matches field order.
struct BenchRow {
  std::string image;
  std::string scheme;
  std::string block_size;
  double mse = 0.0;
  double ssim = 0.0;
  double encode_seconds = 0.0;
  std::size_t threads = 1;
};

inline constexpr const char* kBenchCsvHeader =
    "image,scheme,block_size,mse,ssim,encode_seconds,threads";

void write_csv_row(std::ostream& os, const BenchRow& row);

}  // namespace sbtc
