#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sbtc/btc_gray.hpp"
#include "sbtc/wplane.hpp"
#include "support/generators.hpp"

using namespace sbtc;
using sbtc::testing::Rng;

namespace {

Block block_of(int rows, int cols, std::vector<Pixel> px) {
  Block b;
  b.pixels = PixelGrid(rows, cols, std::move(px));
  return b;
}

// Independent re-summation: per channel, mean of the pixels in each group.
QuantPair group_means_oracle(const Block& b, const Bitmap& m) {
  double sum[2][3] = {};
  int count[2] = {0, 0};
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      const int g = m.bit(i, j) ? 1 : 0;
      ++count[g];
      for (int c = 0; c < 3; ++c) sum[g][c] += b.at(i, j)[c];
    }
  }
  double level[2][3];
  for (int c = 0; c < 3; ++c) {
    for (int g = 0; g < 2; ++g) level[g][c] = count[g] ? sum[g][c] / count[g] : 0.0;
    if (count[1] == 0) level[1][c] = level[0][c];
    if (count[0] == 0) level[0][c] = level[1][c];
  }
  return {level[1][0], level[0][0], level[1][1], level[0][1], level[1][2], level[0][2]};
}

void check_close(const QuantPair& a, const QuantPair& b, double tol = 1e-9) {
  CHECK(a.r_high == doctest::Approx(b.r_high).epsilon(tol));
  CHECK(a.r_low == doctest::Approx(b.r_low).epsilon(tol));
  CHECK(a.g_high == doctest::Approx(b.g_high).epsilon(tol));
  CHECK(a.g_low == doctest::Approx(b.g_low).epsilon(tol));
  CHECK(a.b_high == doctest::Approx(b.b_high).epsilon(tol));
  CHECK(a.b_low == doctest::Approx(b.b_low).epsilon(tol));
}

}  // namespace

TEST_CASE("weighted_plane is the exact channel average") {
  const Block b = block_of(1, 3, {{235, 182, 255}, {77, 77, 77}, {1, 1, 2}});
  const SampleGrid w = weighted_plane(b);
  CHECK(w.at(0, 0) == 224.0);
  CHECK(w.at(0, 1) == 77.0);
  CHECK(w.at(0, 2) == 4.0 / 3.0);
}

TEST_CASE("initial_bitmap") {
  SUBCASE("constant color: ties go high") {
    const Block b = block_of(4, 4, std::vector<Pixel>(16, Pixel{1, 1, 2}));
    CHECK(initial_bitmap(b).popcount() == 16);
  }
  SUBCASE("2x2 gray example") {
    const Block b = block_of(2, 2, {{10, 10, 10}, {10, 10, 10}, {200, 200, 200}, {200, 200, 200}});
    CHECK(initial_bitmap(b) == Bitmap(2, 2, {0, 0, 1, 1}));
  }
}

namespace {

// R+G+B is 3w in exact integers, so gray BTC on it thresholds like w.
SampleGrid channel_sum_plane(const Block& b) {
  SampleGrid s(b.rows(), b.cols());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Pixel& p = b.pixels[k];
    s[k] = static_cast<double>(p[0]) + p[1] + p[2];
  }
  return s;
}

}  // namespace

TEST_CASE("initial_bitmap agrees with gray BTC on the channel-sum plane (property)") {
  Rng rng(17);
  for (int iter = 0; iter < 600; ++iter) {
    const int rows = sbtc::testing::uniform_int(rng, 1, 8);
    const int cols = sbtc::testing::uniform_int(rng, 1, 8);
    const Block b = iter % 2 ? sbtc::testing::random_block(rng, rows, cols)
                             : sbtc::testing::smooth_block(rng, rows, cols, 3);
    REQUIRE(initial_bitmap(b) == encode_gray_block(channel_sum_plane(b)).bitmap);
  }
}

TEST_CASE("quantize_channels on a block built to hit given levels") {
  // 7 set bits around (235, 182, 255), 9 clear bits around (226, 156, 250);
  // per-group offsets sum to zero so the group means land exactly. Blue 255
  // is the maximum, so every set pixel carries it verbatim.
  const Bitmap bits(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1});
  const int hi_off[7] = {2, -1, -1, 3, -3, 0, 0};
  const int lo_off[9] = {1, -1, 2, -2, 4, -4, 0, 0, 0};
  std::vector<Pixel> px(16);
  int h = 0, l = 0;
  for (std::size_t k = 0; k < 16; ++k) {
    if (bits[k]) {
      const int o = hi_off[h++];
      px[k] = {static_cast<std::uint8_t>(235 + o), static_cast<std::uint8_t>(182 - o), 255};
    } else {
      const int o = lo_off[l++];
      px[k] = {static_cast<std::uint8_t>(226 + o), static_cast<std::uint8_t>(156 + o),
               static_cast<std::uint8_t>(250 - o)};
    }
  }
  const Block b = block_of(4, 4, px);
  const QuantPair q = quantize_channels(b, bits);
  check_close(q, {235, 226, 182, 156, 255, 250});
  check_close(q, group_means_oracle(b, bits));
}

TEST_CASE("quantize_channels degenerate bitmaps") {
  Rng rng(5);
  const Block b = sbtc::testing::random_block(rng, 3, 3);
  double mean[3] = {};
  for (const Pixel& p : b.pixels)
    for (int c = 0; c < 3; ++c) mean[c] += p[c] / 9.0;

  const QuantPair ones = quantize_channels(b, Bitmap(3, 3, std::uint8_t{1}));
  check_close(ones, {mean[0], mean[0], mean[1], mean[1], mean[2], mean[2]});
  const QuantPair zeros = quantize_channels(b, Bitmap(3, 3));
  check_close(zeros, {mean[0], mean[0], mean[1], mean[1], mean[2], mean[2]});

  CHECK_THROWS_AS(quantize_channels(b, Bitmap(2, 3)), InvalidInput);
}

TEST_CASE("quantize_channels matches re-summation and decomposes the block sum (property)") {
  Rng rng(23);
  for (int iter = 0; iter < 600; ++iter) {
    const int rows = sbtc::testing::uniform_int(rng, 1, 6);
    const int cols = sbtc::testing::uniform_int(rng, 1, 6);
    const Block b = sbtc::testing::random_block(rng, rows, cols);
    const Bitmap m = sbtc::testing::random_bitmap(rng, rows, cols);
    const QuantPair q = quantize_channels(b, m);
    const QuantPair oracle = group_means_oracle(b, m);
    REQUIRE(q.r_high == doctest::Approx(oracle.r_high).epsilon(1e-12));
    REQUIRE(q.g_low == doctest::Approx(oracle.g_low).epsilon(1e-12));
    REQUIRE(q.b_high == doctest::Approx(oracle.b_high).epsilon(1e-12));

    const double qn = static_cast<double>(m.popcount());
    const double n = static_cast<double>(m.size());
    if (qn > 0 && qn < n) {
      const Vec3 hi = q.high(), lo = q.low();
      for (int c = 0; c < 3; ++c) {
        double sum = 0;
        for (const Pixel& p : b.pixels) sum += p[c];
        REQUIRE(std::abs(qn * hi[c] + (n - qn) * lo[c] - sum) <= 1e-9);
      }
    }
    for (double v : {q.r_high, q.r_low, q.g_high, q.g_low, q.b_high, q.b_low}) {
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 255.0);
    }

    // Permuting pixels and bits together leaves the levels unchanged.
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Block pb = b;
    Bitmap pm = m;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      pb.pixels[k] = b.pixels[perm[k]];
      pm[k] = m[perm[k]];
    }
    const QuantPair pq = quantize_channels(pb, pm);
    REQUIRE(pq.r_high == doctest::Approx(q.r_high).epsilon(1e-12));
    REQUIRE(pq.b_low == doctest::Approx(q.b_low).epsilon(1e-12));
  }
}
