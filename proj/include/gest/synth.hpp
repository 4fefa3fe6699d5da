#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gest/frame.hpp"
#include "gest/geometry.hpp"
#include "gest/motion.hpp"

namespace gest {

// Disc positions and radii are Cartesian (y up); rasterization applies the
// same row flip real input goes through.
struct LinearMotion {
  CartesianPoint start{};
  double velocity_x = 0;  // pixels per frame
  double velocity_y = 0;
  double disc_radius = 1;
};

struct CircularMotion {
  CartesianPoint center{};
  double radius = 0;            // path radius
  double angular_velocity = 0;  // degrees per frame, positive = ccw
  double disc_radius = 1;
};

struct ScalingDisc {
  CartesianPoint center{};
  double radius_start = 1;
  double radius_end = 1;
};

struct StaticDiscs {
  std::vector<CartesianPoint> disc_centers;
  double disc_radius = 1;
};

struct Scenario {
  std::variant<LinearMotion, CircularMotion, ScalingDisc, StaticDiscs> shape;
  int frame_count = 1;
  int width = 1;
  int height = 1;
  std::uint64_t seed = 0;
  double speckle_fraction = 0;  // fraction of pixels flipped white per frame
};

// Deterministic rasterization: a pixel is white iff its center lies within
// disc_radius of a disc center. Validates that every disc stays fully inside
// the frame on every step before any frame is produced; throws gest::error
// otherwise.
std::vector<BinaryFrame> generate(const Scenario& scenario);

// Ground truth for end-to-end checks: the event kinds a tracker running with
// this config must emit for the scenario (payloads are not predicted).
std::vector<GestureKind> expected_events(const Scenario& scenario,
                                         const TrackerConfig& config);

// One JSON object: a "variant" tag plus that variant's parameter fields.
// Throws gest::error on malformed or unknown input.
Scenario parse_scenario(const std::string& json_text);

}  // namespace gest
