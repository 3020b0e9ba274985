#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sbtc/errors.hpp"

namespace sbtc {

using Pixel = std::array<std::uint8_t, 3>;  // (R, G, B)
using Vec3 = std::array<double, 3>;

// Dense row-major rows x cols matrix. Coordinates are 0-based.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), values_(checked_area(rows, cols), fill) {}
  Grid(int rows, int cols, std::vector<T> values)
      : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != checked_area(rows, cols)) {
      throw InvalidInput("grid value count does not match rows*cols");
    }
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }

  T& at(int i, int j) { return values_[index(i, j)]; }
  const T& at(int i, int j) const { return values_[index(i, j)]; }
  T& operator[](std::size_t k) { return values_[k]; }
  const T& operator[](std::size_t k) const { return values_[k]; }

  const std::vector<T>& values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool same_shape(int rows, int cols) const noexcept {
    return rows_ == rows && cols_ == cols;
  }
  template <class U>
  bool same_shape(const Grid<U>& other) const noexcept {
    return same_shape(other.rows(), other.cols());
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  static std::size_t checked_area(int rows, int cols) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative grid dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> values_;
};

using PixelGrid = Grid<Pixel>;
using SampleGrid = Grid<double>;

// Common bitmap: one bit per pixel, shared by every channel. Entries are 0/1.
class Bitmap : public Grid<std::uint8_t> {
 public:
  using Grid<std::uint8_t>::Grid;

  bool bit(int i, int j) const { return at(i, j) != 0; }
  void set(int i, int j, bool value) { at(i, j) = value ? 1 : 0; }

  std::size_t popcount() const noexcept {
    std::size_t q = 0;
    for (auto b : *this) q += (b != 0);
    return q;
  }

  friend bool operator==(const Bitmap&, const Bitmap&) = default;
};

inline std::size_t hamming_distance(const Bitmap& a, const Bitmap& b) {
  if (!a.same_shape(b)) throw InvalidInput("bitmap shapes differ");
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d += ((a[k] != 0) != (b[k] != 0));
  return d;
}

}  // namespace sbtc
