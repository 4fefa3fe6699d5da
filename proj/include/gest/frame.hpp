#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gest/error.hpp"

namespace gest {

// 0-based image coordinates; row 0 is the top row.
struct PixelCoord {
  int col = 0;
  int row = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

// Inclusive per-channel bounds. A pixel matches when all three channels fall
// inside their bounds.
struct ColorRange {
  std::uint8_t r_min = 0, r_max = 255;
  std::uint8_t g_min = 0, g_max = 255;
  std::uint8_t b_min = 0, b_max = 255;

  bool contains(std::uint8_t r, std::uint8_t g, std::uint8_t b) const {
    return r >= r_min && r <= r_max && g >= g_min && g <= g_max && b >= b_min &&
           b <= b_max;
  }
  bool well_formed() const {
    return r_min <= r_max && g_min <= g_max && b_min <= b_max;
  }
};

// 8-bit RGB image, row-major, three bytes per pixel.
struct RgbFrame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width * height * 3

  RgbFrame() = default;
  RgbFrame(int w, int h);

  std::size_t offset(int col, int row) const {
    return 3 * (static_cast<std::size_t>(row) * width + col);
  }
  void set_pixel(int col, int row, std::uint8_t r, std::uint8_t g,
                 std::uint8_t b) {
    const std::size_t o = offset(col, row);
    data[o] = r;
    data[o + 1] = g;
    data[o + 2] = b;
  }

  friend bool operator==(const RgbFrame&, const RgbFrame&) = default;
};

// 1-bit image where bit 1 means white (the target color). Bits are packed
// row-major, most significant bit first, each row padded to a whole byte.
// Padding bits are kept zero so byte-wise popcounts stay exact.
class BinaryFrame {
 public:
  BinaryFrame() = default;
  BinaryFrame(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t row_stride() const { return stride_; }

  bool bit(int col, int row) const {
    const std::uint8_t byte =
        bytes_[static_cast<std::size_t>(row) * stride_ + (col >> 3)];
    return (byte >> (7 - (col & 7))) & 1u;
  }
  void set_bit(int col, int row, bool on) {
    std::uint8_t& byte =
        bytes_[static_cast<std::size_t>(row) * stride_ + (col >> 3)];
    const auto mask = static_cast<std::uint8_t>(1u << (7 - (col & 7)));
    if (on)
      byte |= mask;
    else
      byte &= static_cast<std::uint8_t>(~mask);
  }

  // Overwrite one row from packed bits (already in the 1 = white sense);
  // padding bits past the width are cleared.
  void assign_row(int row, std::span<const std::uint8_t> packed);

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  friend bool operator==(const BinaryFrame&, const BinaryFrame&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint8_t> bytes_;
};

// 1 iff every channel of the pixel lies inside the range.
BinaryFrame binarize(const RgbFrame& frame, const ColorRange& range);

std::int64_t white_count(const BinaryFrame& frame);

// Sum over all positions of (second bit - first bit); equal to
// white_count(second) - white_count(first). Throws dimension_error when the
// frames disagree on size.
std::int64_t frame_diff_sum(const BinaryFrame& first, const BinaryFrame& second);

}  // namespace gest
