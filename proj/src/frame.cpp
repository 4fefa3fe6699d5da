#include "gest/frame.hpp"

#include <bit>
#include <string>

namespace gest {

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1)
    throw error("frame dimensions must be positive, got " +
                std::to_string(width) + "x" + std::to_string(height));
}

}  // namespace

RgbFrame::RgbFrame(int w, int h) : width(w), height(h) {
  check_dims(w, h);
  data.assign(3 * static_cast<std::size_t>(w) * h, 0);
}

BinaryFrame::BinaryFrame(int width, int height)
    : width_(width), height_(height) {
  check_dims(width, height);
  stride_ = (static_cast<std::size_t>(width) + 7) / 8;
  bytes_.assign(stride_ * height, 0);
}

void BinaryFrame::assign_row(int row, std::span<const std::uint8_t> packed) {
  std::uint8_t* dst = bytes_.data() + static_cast<std::size_t>(row) * stride_;
  for (std::size_t i = 0; i < stride_; ++i) dst[i] = packed[i];
  const int used = width_ - 8 * (static_cast<int>(stride_) - 1);
  dst[stride_ - 1] &= static_cast<std::uint8_t>(0xFFu << (8 - used));
}

BinaryFrame binarize(const RgbFrame& frame, const ColorRange& range) {
  BinaryFrame out(frame.width, frame.height);
  const std::uint8_t* px = frame.data.data();
  for (int row = 0; row < frame.height; ++row) {
    for (int col = 0; col < frame.width; ++col, px += 3) {
      if (range.contains(px[0], px[1], px[2])) out.set_bit(col, row, true);
    }
  }
  return out;
}

std::int64_t white_count(const BinaryFrame& frame) {
  std::int64_t total = 0;
  for (std::uint8_t b : frame.bytes()) total += std::popcount(b);
  return total;
}

std::int64_t frame_diff_sum(const BinaryFrame& first,
                            const BinaryFrame& second) {
  if (first.width() != second.width() || first.height() != second.height())
    throw dimension_error(
        "frame_diff_sum: dimensions differ: " + std::to_string(first.width()) +
        "x" + std::to_string(first.height()) + " vs " +
        std::to_string(second.width()) + "x" + std::to_string(second.height()));
  return white_count(second) - white_count(first);
}

}  // namespace gest
