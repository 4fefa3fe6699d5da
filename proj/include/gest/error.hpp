#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gest {

// Base class for everything this library throws.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input bytes; offset is the byte position the parser gave up at.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t at)
      : error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}

  std::size_t offset;
};

// Two frames (or a frame and its stream) disagree on dimensions.
struct dimension_error : error {
  using error::error;
};

// Geometry that collapses below tolerance: collinear circle points,
// a zero-length direction ray, a degenerate turn.
struct degenerate_error : error {
  using error::error;
};

}  // namespace gest
