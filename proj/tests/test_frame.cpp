#include <random>

#include "doctest.h"
#include "gest/frame.hpp"
#include "test_support.hpp"

using namespace gest;

TEST_CASE("binarize keeps pixels whose channels all sit inside the range") {
  const ColorRange range{200, 255, 0, 60, 0, 60};

  RgbFrame red(1, 1);
  red.set_pixel(0, 0, 255, 0, 0);
  CHECK(binarize(red, range).bit(0, 0));

  RgbFrame green(1, 1);
  green.set_pixel(0, 0, 0, 255, 0);
  CHECK_FALSE(binarize(green, range).bit(0, 0));
}

TEST_CASE("binarize evaluates the three-channel conjunction per pixel") {
  const ColorRange range{200, 255, 0, 60, 0, 60};
  RgbFrame frame(2, 2);
  frame.set_pixel(0, 0, 210, 10, 10);
  frame.set_pixel(1, 0, 0, 0, 0);
  frame.set_pixel(0, 1, 255, 59, 0);
  frame.set_pixel(1, 1, 199, 0, 0);  // red channel one short of the range

  const BinaryFrame out = binarize(frame, range);
  CHECK(out.bit(0, 0));
  CHECK_FALSE(out.bit(1, 0));
  CHECK(out.bit(0, 1));
  CHECK_FALSE(out.bit(1, 1));
  CHECK(white_count(out) == 2);
}

TEST_CASE("binarize output never exceeds the pixel count") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const int w = 1 + static_cast<int>(rng() % 20);
    const int h = 1 + static_cast<int>(rng() % 20);
    const RgbFrame frame = testsupport::random_rgb(rng, w, h);
    ColorRange range;
    range.r_min = static_cast<std::uint8_t>(rng() % 256);
    range.r_max = static_cast<std::uint8_t>(
        range.r_min + rng() % (256 - range.r_min));
    range.g_min = static_cast<std::uint8_t>(rng() % 256);
    range.g_max = static_cast<std::uint8_t>(
        range.g_min + rng() % (256 - range.g_min));
    range.b_min = static_cast<std::uint8_t>(rng() % 256);
    range.b_max = static_cast<std::uint8_t>(
        range.b_min + rng() % (256 - range.b_min));
    CHECK(white_count(binarize(frame, range)) <=
          static_cast<std::int64_t>(w) * h);
  }
}

TEST_CASE("widening the range never turns a white pixel black") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const int w = 1 + static_cast<int>(rng() % 16);
    const int h = 1 + static_cast<int>(rng() % 16);
    const RgbFrame frame = testsupport::random_rgb(rng, w, h);

    ColorRange narrow;
    narrow.r_min = 100;
    narrow.r_max = 180;
    narrow.g_min = 50;
    narrow.g_max = 200;
    narrow.b_min = 30;
    narrow.b_max = 220;
    ColorRange wide = narrow;
    wide.r_min = 60;
    wide.r_max = 230;
    wide.g_min = 10;
    wide.g_max = 240;
    wide.b_min = 0;
    wide.b_max = 255;

    const BinaryFrame a = binarize(frame, narrow);
    const BinaryFrame b = binarize(frame, wide);
    for (int row = 0; row < h; ++row)
      for (int col = 0; col < w; ++col)
        if (a.bit(col, row)) CHECK(b.bit(col, row));
  }
}

TEST_CASE("white_count counts set bits") {
  BinaryFrame zeros(4, 4);
  CHECK(white_count(zeros) == 0);

  BinaryFrame ones(4, 4);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col) ones.set_bit(col, row, true);
  CHECK(white_count(ones) == 16);
}

TEST_CASE("frame_diff_sum equals the elementwise difference sum") {
  const BinaryFrame a =
      testsupport::frame_from(4, 3, {{0, 0}, {1, 0}, {2, 1}, {3, 2}, {0, 2}});
  const BinaryFrame b = testsupport::frame_from(
      4, 3,
      {{0, 0}, {1, 0}, {2, 1}, {3, 2}, {0, 2}, {1, 1}, {2, 0}, {3, 0}, {0, 1}});
  CHECK(frame_diff_sum(a, a) == 0);
  CHECK(frame_diff_sum(a, b) == 4);
  CHECK(frame_diff_sum(b, a) == -4);

  // brute-force elementwise oracle over random pairs
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    const int w = 1 + static_cast<int>(rng() % 24);
    const int h = 1 + static_cast<int>(rng() % 24);
    const BinaryFrame x = testsupport::random_binary(rng, w, h, 0.4);
    const BinaryFrame y = testsupport::random_binary(rng, w, h, 0.6);
    std::int64_t expected = 0;
    for (int row = 0; row < h; ++row)
      for (int col = 0; col < w; ++col)
        expected += static_cast<int>(y.bit(col, row)) -
                    static_cast<int>(x.bit(col, row));
    CHECK(frame_diff_sum(x, y) == expected);
    CHECK(frame_diff_sum(x, y) == -frame_diff_sum(y, x));
  }
}

TEST_CASE("frame_diff_sum rejects mismatched dimensions") {
  const BinaryFrame a(4, 4);
  const BinaryFrame b(4, 5);
  CHECK_THROWS_AS(frame_diff_sum(a, b), dimension_error);
}

TEST_CASE("frames reject non-positive dimensions") {
  CHECK_THROWS_AS(RgbFrame(0, 4), error);
  CHECK_THROWS_AS(BinaryFrame(3, 0), error);
}
