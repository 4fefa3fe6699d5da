#include "gest/netpbm.hpp"

#include <algorithm>
#include <fstream>
#include <string>

namespace gest {

namespace {

constexpr long kMaxDimension = 1 << 15;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

struct Cursor {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  std::uint8_t peek() const { return data[pos]; }
};

// Netpbm headers allow '#' comments wherever whitespace may appear.
void skip_space_and_comments(Cursor& cur) {
  for (;;) {
    while (!cur.eof() && is_space(cur.peek())) ++cur.pos;
    if (!cur.eof() && cur.peek() == '#') {
      while (!cur.eof() && cur.peek() != '\n') ++cur.pos;
      continue;
    }
    return;
  }
}

struct Token {
  long value;
  std::size_t at;
};

Token parse_header_int(Cursor& cur, const char* what, long min_value,
                       long max_value) {
  skip_space_and_comments(cur);
  const std::size_t at = cur.pos;
  if (cur.eof() || !is_digit(cur.peek()))
    throw parse_error(std::string("expected ") + what, cur.pos);
  long value = 0;
  while (!cur.eof() && is_digit(cur.peek())) {
    value = value * 10 + (cur.peek() - '0');
    if (value > max_value)
      throw parse_error(std::string(what) + " out of range", at);
    ++cur.pos;
  }
  if (value < min_value)
    throw parse_error(std::string(what) + " out of range", at);
  return {value, at};
}

void expect_single_space(Cursor& cur) {
  if (cur.eof() || !is_space(cur.peek()))
    throw parse_error("expected whitespace before pixel data", cur.pos);
  ++cur.pos;
}

void check_magic(std::span<const std::uint8_t> bytes, char kind,
                 const char* message) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != kind)
    throw parse_error(message, 0);
}

void append_text(std::vector<std::uint8_t>& out, const std::string& text) {
  out.insert(out.end(), text.begin(), text.end());
}

}  // namespace

NetpbmKind identify_netpbm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '6') return NetpbmKind::ppm;
    if (bytes[1] == '1' || bytes[1] == '4') return NetpbmKind::pbm;
  }
  throw parse_error("not a supported netpbm file (want P6, P1 or P4)", 0);
}

RgbFrame read_ppm(std::span<const std::uint8_t> bytes) {
  check_magic(bytes, '6', "expected 'P6' magic");
  Cursor cur{bytes, 2};
  const long width = parse_header_int(cur, "width", 1, kMaxDimension).value;
  const long height = parse_header_int(cur, "height", 1, kMaxDimension).value;
  const Token maxval = parse_header_int(cur, "maxval", 0, 1 << 16);
  if (maxval.value != 255)
    throw parse_error("unsupported maxval " + std::to_string(maxval.value) +
                          " (only 255)",
                      maxval.at);
  expect_single_space(cur);
  const std::size_t need = 3 * static_cast<std::size_t>(width) * height;
  if (bytes.size() - cur.pos < need)
    throw parse_error("truncated pixel data", bytes.size());
  RgbFrame frame(static_cast<int>(width), static_cast<int>(height));
  std::copy_n(bytes.data() + cur.pos, need, frame.data.data());
  return frame;
}

std::vector<std::uint8_t> write_ppm(const RgbFrame& frame) {
  std::vector<std::uint8_t> out;
  out.reserve(frame.data.size() + 32);
  append_text(out, "P6\n" + std::to_string(frame.width) + " " +
                       std::to_string(frame.height) + "\n255\n");
  out.insert(out.end(), frame.data.begin(), frame.data.end());
  return out;
}

BinaryFrame read_pbm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' ||
      (bytes[1] != '1' && bytes[1] != '4'))
    throw parse_error("expected 'P1' or 'P4' magic", 0);
  const bool raw = bytes[1] == '4';
  Cursor cur{bytes, 2};
  const long width = parse_header_int(cur, "width", 1, kMaxDimension).value;
  const long height = parse_header_int(cur, "height", 1, kMaxDimension).value;
  BinaryFrame frame(static_cast<int>(width), static_cast<int>(height));

  if (raw) {
    expect_single_space(cur);
    const std::size_t stride = frame.row_stride();
    if (bytes.size() - cur.pos < stride * static_cast<std::size_t>(height))
      throw parse_error("truncated pixel data", bytes.size());
    std::vector<std::uint8_t> row(stride);
    for (long r = 0; r < height; ++r) {
      for (std::size_t i = 0; i < stride; ++i)
        row[i] = static_cast<std::uint8_t>(~bytes[cur.pos + i]);
      frame.assign_row(static_cast<int>(r), row);
      cur.pos += stride;
    }
    return frame;
  }

  // Plain format: one ASCII digit per pixel, whitespace and comments ignored.
  for (long r = 0; r < height; ++r) {
    for (long c = 0; c < width; ++c) {
      skip_space_and_comments(cur);
      if (cur.eof()) throw parse_error("truncated pixel data", bytes.size());
      const std::uint8_t digit = cur.peek();
      if (digit != '0' && digit != '1')
        throw parse_error("expected '0' or '1'", cur.pos);
      if (digit == '0')  // PBM 0 = white
        frame.set_bit(static_cast<int>(c), static_cast<int>(r), true);
      ++cur.pos;
    }
  }
  return frame;
}

std::vector<std::uint8_t> write_pbm(const BinaryFrame& frame) {
  std::vector<std::uint8_t> out;
  const std::size_t stride = frame.row_stride();
  out.reserve(stride * frame.height() + 32);
  append_text(out, "P4\n" + std::to_string(frame.width()) + " " +
                       std::to_string(frame.height()) + "\n");
  const int used = frame.width() - 8 * (static_cast<int>(stride) - 1);
  const auto tail_mask = static_cast<std::uint8_t>(0xFFu << (8 - used));
  const std::uint8_t* src = frame.bytes().data();
  for (int r = 0; r < frame.height(); ++r, src += stride) {
    for (std::size_t i = 0; i + 1 < stride; ++i)
      out.push_back(static_cast<std::uint8_t>(~src[i]));
    // pad bits are written as zero
    out.push_back(static_cast<std::uint8_t>(~src[stride - 1]) & tail_mask);
  }
  return out;
}

std::vector<std::uint8_t> load_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes;
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  if (size < 0) throw error("cannot read " + path.string());
  bytes.resize(static_cast<std::size_t>(size));
  in.seekg(0);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!in) throw error("cannot read " + path.string());
  return bytes;
}

void save_bytes(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw error("cannot write " + path.string());
}

RgbFrame read_ppm_file(const std::filesystem::path& path) {
  return read_ppm(load_bytes(path));
}

void write_ppm_file(const std::filesystem::path& path, const RgbFrame& frame) {
  save_bytes(path, write_ppm(frame));
}

BinaryFrame read_pbm_file(const std::filesystem::path& path) {
  return read_pbm(load_bytes(path));
}

void write_pbm_file(const std::filesystem::path& path,
                    const BinaryFrame& frame) {
  save_bytes(path, write_pbm(frame));
}

}  // namespace gest
