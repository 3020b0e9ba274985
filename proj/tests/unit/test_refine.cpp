#include <doctest.h>

#include <cmath>
#include <limits>

#include "sbtc/refine.hpp"
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

// Naive double loop over (i, j) and channels.
double naive_cost(const Block& b, const Bitmap& m, const QuantPair& q) {
  const double hi[3] = {q.r_high, q.g_high, q.b_high};
  const double lo[3] = {q.r_low, q.g_low, q.b_low};
  double cost = 0;
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      for (int c = 0; c < 3; ++c) {
        const double ref = m.bit(i, j) ? hi[c] : lo[c];
        cost += (b.at(i, j)[c] - ref) * (b.at(i, j)[c] - ref);
      }
    }
  }
  return cost;
}

double exhaustive_min_cost(const Block& b, const QuantPair& q) {
  const std::size_t n = b.pixels.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Bitmap m(b.rows(), b.cols());
    for (std::size_t k = 0; k < n; ++k) m[k] = (mask >> k) & 1;
    best = std::min(best, naive_cost(b, m, q));
  }
  return best;
}

}  // namespace

TEST_CASE("block_cost") {
  SUBCASE("zero residual") {
    const Block b = block_of(1, 2, {{10, 20, 30}, {40, 50, 60}});
    CHECK(block_cost(b, Bitmap(1, 2, {1, 0}), {10, 40, 20, 50, 30, 60}) == 0.0);
  }
  SUBCASE("single pixel") {
    const Block b = block_of(1, 1, {{10, 10, 10}});
    CHECK(block_cost(b, Bitmap(1, 1, std::uint8_t{1}), {13, 0, 14, 0, 10, 0}) == 25.0);
  }
  SUBCASE("matches naive re-summation") {
    Rng rng(1);
    for (int iter = 0; iter < 200; ++iter) {
      const Block b = sbtc::testing::random_block(rng, 2, 2);
      const Bitmap m = sbtc::testing::random_bitmap(rng, 2, 2);
      const QuantPair q = quantize_channels(b, sbtc::testing::random_bitmap(rng, 2, 2));
      REQUIRE(block_cost(b, m, q) == doctest::Approx(naive_cost(b, m, q)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(block_cost(block_of(1, 1, {{0, 0, 0}}), Bitmap(2, 1), {}), InvalidInput);
}

TEST_CASE("flip_delta") {
  SUBCASE("midway pixel has zero delta") {
    const Block b = block_of(1, 1, {{100, 100, 100}});
    CHECK(flip_delta(b, Bitmap(1, 1), {110, 90, 110, 90, 110, 90}, 0, 0) == 0.0);
  }
  SUBCASE("cost 1.2 -> 1.3 on flip: positive delta, bit kept") {
    // Distances chosen so the set bit costs 1.2 and the flipped bit 1.3.
    const Block b = block_of(1, 1, {{0, 0, 0}});
    const QuantPair q{std::sqrt(1.2), std::sqrt(1.3), 0, 0, 0, 0};
    const Bitmap m(1, 1, std::uint8_t{1});
    CHECK(block_cost(b, m, q) == doctest::Approx(1.2));
    CHECK(flip_delta(b, m, q, 0, 0) == doctest::Approx(0.1));
    const RefineResult r = refine_bitmap(b, m, q);
    CHECK(r.flips == 0);
    CHECK(r.final_bitmap == m);
  }
  SUBCASE("equals full recompute (property)") {
    Rng rng(31);
    for (int iter = 0; iter < 600; ++iter) {
      const int rows = sbtc::testing::uniform_int(rng, 1, 8);
      const int cols = sbtc::testing::uniform_int(rng, 1, 8);
      const Block b = sbtc::testing::random_block(rng, rows, cols);
      const Bitmap m = sbtc::testing::random_bitmap(rng, rows, cols);
      const QuantPair q = quantize_channels(b, sbtc::testing::random_bitmap(rng, rows, cols));
      const int i = sbtc::testing::uniform_int(rng, 0, rows - 1);
      const int j = sbtc::testing::uniform_int(rng, 0, cols - 1);
      Bitmap flipped = m;
      flipped.set(i, j, !m.bit(i, j));
      const double full = block_cost(b, flipped, q) - block_cost(b, m, q);
      REQUIRE(std::abs(flip_delta(b, m, q, i, j) - full) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(flip_delta(block_of(1, 1, {{0, 0, 0}}), Bitmap(1, 1), {}, 1, 0), InvalidInput);
}

TEST_CASE("refine_bitmap keeps an already optimal bitmap") {
  const Block b = block_of(2, 2, {{10, 10, 10}, {200, 200, 200}, {10, 10, 10}, {200, 200, 200}});
  const Bitmap init = initial_bitmap(b);
  const RefineResult r = refine_bitmap(b, init, quantize_channels(b, init));
  CHECK(r.final_bitmap == init);
  CHECK(r.flips == 0);
  CHECK(r.initial_cost == 0.0);
  CHECK(r.final_cost == 0.0);
}

TEST_CASE("refine_bitmap improves a W-plane bitmap where the weighted plane misleads") {
  // Red and blue pixels share a weighted value; the W-plane puts them in the
  // same group, a per-bit flip separates them.
  const Block b = block_of(2, 2, {{255, 0, 0}, {255, 0, 0}, {0, 0, 255}, {0, 0, 200}});
  const Bitmap init = initial_bitmap(b);
  const QuantPair q = quantize_channels(b, init);
  const RefineResult r = refine_bitmap(b, init, q);
  CHECK(r.flips > 0);
  CHECK(r.final_cost < r.initial_cost);
  CHECK(hamming_distance(init, r.final_bitmap) == r.flips);
}

TEST_CASE("refine_bitmap reaches the exhaustive minimum for fixed levels (property)") {
  Rng rng(2718);
  for (int iter = 0; iter < 500; ++iter) {
    const int rows = sbtc::testing::uniform_int(rng, 1, 2);
    const int cols = sbtc::testing::uniform_int(rng, 1, 3);
    const Block b = iter % 3 ? sbtc::testing::random_block(rng, rows, cols)
                             : sbtc::testing::smooth_block(rng, rows, cols);
    const Bitmap init = initial_bitmap(b);
    const QuantPair q = quantize_channels(b, init);
    const RefineResult r = refine_bitmap(b, init, q);
    REQUIRE(r.final_cost == doctest::Approx(exhaustive_min_cost(b, q)).epsilon(1e-12));
  }
}

TEST_CASE("refine_bitmap invariants (property)") {
  Rng rng(161);
  for (int iter = 0; iter < 600; ++iter) {
    const int rows = sbtc::testing::uniform_int(rng, 1, 8);
    const int cols = sbtc::testing::uniform_int(rng, 1, 8);
    const Block b = iter % 2 ? sbtc::testing::random_block(rng, rows, cols)
                             : sbtc::testing::smooth_block(rng, rows, cols);
    const Bitmap init = iter % 5 ? initial_bitmap(b)
                                 : sbtc::testing::random_bitmap(rng, rows, cols);
    const QuantPair q = quantize_channels(b, init);

    const RefineResult row = refine_bitmap(b, init, q, Traversal::RowMajor);
    const RefineResult col = refine_bitmap(b, init, q, Traversal::ColumnMajor);
    REQUIRE(row.final_cost <= row.initial_cost);
    REQUIRE(row.flips == hamming_distance(init, row.final_bitmap));
    REQUIRE(row.final_bitmap == col.final_bitmap);
    REQUIRE(row.final_cost == doctest::Approx(naive_cost(b, row.final_bitmap, q)).epsilon(1e-12));

    const RefineResult again = refine_bitmap(b, row.final_bitmap, q);
    REQUIRE(again.flips == 0);
    REQUIRE(again.final_bitmap == row.final_bitmap);
  }
}

TEST_CASE("refine_to_fixpoint converges and never increases cost") {
  Rng rng(404);
  for (int iter = 0; iter < 300; ++iter) {
    const Block b = sbtc::testing::random_block(rng, 4, 4);
    const Bitmap init = initial_bitmap(b);
    const double start = block_cost(b, init, quantize_channels(b, init));

    const IteratedRefinement fx = refine_to_fixpoint(b, init);
    REQUIRE(fx.passes >= 1);
    REQUIRE(fx.quant == quantize_channels(b, fx.bitmap));
    REQUIRE(refine_bitmap(b, fx.bitmap, fx.quant).flips == 0);
    REQUIRE(block_cost(b, fx.bitmap, fx.quant) <= start + 1e-9);

    const RefineResult single = refine_bitmap(b, init, quantize_channels(b, init));
    const double one_pass = block_cost(b, single.final_bitmap,
                                       quantize_channels(b, single.final_bitmap));
    REQUIRE(block_cost(b, fx.bitmap, fx.quant) <= one_pass + 1e-9);
  }
}
