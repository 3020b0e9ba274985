#include <doctest.h>

#include <set>

#include "sbtc/codec.hpp"
#include "sbtc/reconstruct.hpp"
#include "sbtc/refine.hpp"
#include "support/generators.hpp"

using namespace sbtc;
using sbtc::testing::Rng;

namespace {

Block block_of(int rows, int cols, std::vector<Pixel> px) {
  Block b;
  b.pixels = PixelGrid(rows, cols, std::move(px));
  return b;
}

}  // namespace

TEST_CASE("reconstruct_block reproduces the 4x4 color worked example") {
  const Bitmap bf(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1});
  const PixelGrid out = reconstruct_block(bf, {235, 226, 182, 156, 255, 250});
  const int r[16] = {235, 226, 226, 226, 226, 235, 226, 226, 226, 226, 235, 226, 235, 235, 235, 235};
  const int g[16] = {182, 156, 156, 156, 156, 182, 156, 156, 156, 156, 182, 156, 182, 182, 182, 182};
  const int b[16] = {255, 250, 250, 250, 250, 255, 250, 250, 250, 250, 255, 250, 255, 255, 255, 255};
  for (std::size_t k = 0; k < 16; ++k) {
    CHECK(out[k][0] == r[k]);
    CHECK(out[k][1] == g[k]);
    CHECK(out[k][2] == b[k]);
  }
}

TEST_CASE("reconstruct_block rounding and degenerate bitmaps") {
  const PixelGrid uniform = reconstruct_block(Bitmap(2, 2, std::uint8_t{1}), {10, 0, 20, 0, 30, 0});
  for (const Pixel& p : uniform) CHECK(p == Pixel{10, 20, 30});

  // Ties to even, clamp at both ends.
  const PixelGrid r = reconstruct_block(Bitmap(1, 2, {1, 0}), {10.5, 11.5, 300, -4, 254.6, 0.49});
  CHECK(r[0] == Pixel{10, 255, 255});
  CHECK(r[1] == Pixel{12, 0, 0});
}

TEST_CASE("final_quantize") {
  Rng rng(77);
  const Block b = sbtc::testing::random_block(rng, 3, 3);
  const Bitmap init = initial_bitmap(b);
  CHECK(final_quantize(b, init) == quantize_channels(b, init));

  double mean[3] = {};
  for (const Pixel& p : b.pixels)
    for (int c = 0; c < 3; ++c) mean[c] += p[c];
  const QuantPair z = final_quantize(b, Bitmap(3, 3));
  CHECK(z.r_low == doctest::Approx(mean[0] / 9));
  CHECK(z.g_low == doctest::Approx(mean[1] / 9));
  CHECK(z.b_low == doctest::Approx(mean[2] / 9));
  CHECK(z.r_high == z.r_low);
  CHECK(z.b_high == z.b_low);

  // Re-summation oracle on a random split.
  const Bitmap m(3, 3, {1, 0, 1, 1, 0, 0, 0, 1, 0});
  double hi = 0, lo = 0;
  for (std::size_t k = 0; k < 9; ++k) (m[k] ? hi : lo) += b.pixels[k][1];
  const QuantPair q = final_quantize(b, m);
  CHECK(q.g_high == doctest::Approx(hi / 4));
  CHECK(q.g_low == doctest::Approx(lo / 5));
}

TEST_CASE("two-color block survives the pipeline losslessly") {
  const Pixel a{200, 40, 90}, c{20, 180, 60};
  std::vector<Pixel> px;
  for (int k = 0; k < 16; ++k) px.push_back((k * 5) % 3 == 0 ? a : c);
  const Block b = block_of(4, 4, px);
  for (const BlockCode& code : {encode_block_wplane(b), encode_block_proposed(b)}) {
    CHECK(reconstruct_block(code.bitmap, code.quant) == b.pixels);
  }
}

TEST_CASE("refinement plus re-quantization never raises block error (property)") {
  Rng rng(8080);
  for (int iter = 0; iter < 600; ++iter) {
    const int rows = sbtc::testing::uniform_int(rng, 2, 8);
    const int cols = sbtc::testing::uniform_int(rng, 2, 8);
    const Block b = iter % 2 ? sbtc::testing::random_block(rng, rows, cols)
                             : sbtc::testing::smooth_block(rng, rows, cols);
    const Bitmap init = initial_bitmap(b);
    const QuantPair q0 = quantize_channels(b, init);
    const RefineResult r = refine_bitmap(b, init, q0);
    const QuantPair q1 = final_quantize(b, r.final_bitmap);
    REQUIRE(block_cost(b, r.final_bitmap, q1) <= r.final_cost + 1e-9);
    REQUIRE(r.final_cost <= block_cost(b, init, q0) + 1e-9);

    const PixelGrid out = reconstruct_block(r.final_bitmap, q1);
    for (int c = 0; c < 3; ++c) {
      std::set<int> distinct;
      for (const Pixel& p : out) distinct.insert(p[c]);
      REQUIRE(distinct.size() <= 2);
    }
  }
}
