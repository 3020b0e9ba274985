#include "sbtc/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace sbtc {

namespace {

void check_dims(const RgbImage& a, const RgbImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw InvalidInput("image dimensions differ: " + std::to_string(a.width()) + "x" +
                       std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                       "x" + std::to_string(b.height()));
  }
  if (a.empty()) throw InvalidInput("metrics need a non-empty image");
}

// SSIM on one rectangular window of one channel, population moments.
double window_ssim(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y,
                   std::size_t stride, std::size_t row0, std::size_t col0, std::size_t rows,
                   std::size_t cols) {
  const double n = static_cast<double>(rows * cols);
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t k = (row0 + i) * stride + col0 + j;
      sx += x[k];
      sy += y[k];
    }
  }
  const double mx = sx / n;
  const double my = sy / n;
  double vx = 0, vy = 0, cxy = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t k = (row0 + i) * stride + col0 + j;
      const double dx = x[k] - mx;
      const double dy = y[k] - my;
      vx += dx * dx;
      vy += dy * dy;
      cxy += dx * dy;
    }
  }
  vx /= n;
  vy /= n;
  cxy /= n;
  return ((2 * mx * my + kSsimC1) * (2 * cxy + kSsimC2)) /
         ((mx * mx + my * my + kSsimC1) * (vx + vy + kSsimC2));
}

double channel_ssim(const RgbImage& a, const RgbImage& b, Channel c, SsimMode mode) {
  const auto& x = a.plane(c);
  const auto& y = b.plane(c);
  const std::size_t w = a.width();
  const std::size_t h = a.height();
  if (mode == SsimMode::Global) return window_ssim(x, y, w, 0, 0, h, w);

  // Partial windows at the right/bottom edges count with their actual area.
  double acc = 0.0;
  for (std::size_t r = 0; r < h; r += kSsimWindow) {
    const std::size_t rows = std::min<std::size_t>(kSsimWindow, h - r);
    for (std::size_t col = 0; col < w; col += kSsimWindow) {
      const std::size_t cols = std::min<std::size_t>(kSsimWindow, w - col);
      acc += window_ssim(x, y, w, r, col, rows, cols) * static_cast<double>(rows * cols);
    }
  }
  return acc / static_cast<double>(w * h);
}

}  // namespace

std::array<double, 3> channel_mse(const RgbImage& original, const RgbImage& reconstructed) {
  check_dims(original, reconstructed);
  std::array<double, 3> out{};
  for (int c = 0; c < 3; ++c) {
    const auto& x = original.plane(static_cast<Channel>(c));
    const auto& y = reconstructed.plane(static_cast<Channel>(c));
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const int d = int{x[k]} - int{y[k]};
      sum += static_cast<std::uint64_t>(d * d);
    }
    out[c] = static_cast<double>(sum) / static_cast<double>(x.size());
  }
  return out;
}

double color_mse(const RgbImage& original, const RgbImage& reconstructed) {
  const auto ch = channel_mse(original, reconstructed);
  return (ch[0] + ch[1] + ch[2]) / 3.0;
}

double saturated_mse(const RgbImage& original, const RgbImage& reconstructed) {
  check_dims(original, reconstructed);
  std::uint64_t sum = 0;
  for (int c = 0; c < 3; ++c) {
    const auto& x = original.plane(static_cast<Channel>(c));
    const auto& y = reconstructed.plane(static_cast<Channel>(c));
    for (std::size_t k = 0; k < x.size(); ++k) {
      const int d = std::max(int{x[k]} - int{y[k]}, 0);
      sum += static_cast<std::uint64_t>(d * d);
    }
  }
  return static_cast<double>(sum) / (3.0 * static_cast<double>(original.pixel_count()));
}

double ssim(const RgbImage& original, const RgbImage& reconstructed, SsimMode mode) {
  check_dims(original, reconstructed);
  double acc = 0.0;
  for (int c = 0; c < 3; ++c) {
    acc += channel_ssim(original, reconstructed, static_cast<Channel>(c), mode);
  }
  return acc / 3.0;
}

QualityReport quality_report(const RgbImage& original, const RgbImage& reconstructed,
                             SsimMode mode) {
  QualityReport r;
  r.per_channel_mse = channel_mse(original, reconstructed);
  r.mse = (r.per_channel_mse[0] + r.per_channel_mse[1] + r.per_channel_mse[2]) / 3.0;
  r.ssim = ssim(original, reconstructed, mode);
  return r;
}

void write_csv_row(std::ostream& os, const BenchRow& row) {
  auto field = [&](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      os << s;
      return;
    }
    os << '"';
    for (char ch : s) {
      if (ch == '"') os << '"';
      os << ch;
    }
    os << '"';
  };
  char num[64];
  field(row.image);
  os << ',';
  field(row.scheme);
  os << ',';
  field(row.block_size);
  std::snprintf(num, sizeof num, ",%.4f,%.4f,%.6f,", row.mse, row.ssim, row.encode_seconds);
  os << num << row.threads << '\n';
}

}  // namespace sbtc
