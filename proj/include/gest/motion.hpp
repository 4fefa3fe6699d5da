#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gest/cluster.hpp"
#include "gest/frame.hpp"
#include "gest/geometry.hpp"

namespace gest {

struct TrackerConfig {
  std::optional<ColorRange> color_range;  // needed only when ingesting RGB
  Connectivity connectivity = Connectivity::four;
  int stationary_frame_limit = 5;
  double stationary_epsilon = 1.0;
  double vertical_threshold = 20.0;
  double horizontal_threshold = 20.0;
  std::int64_t zoom_threshold = 50;
  double rotation_min_radius = 5.0;
  double rotation_max_radius = 1000.0;
  double alignment_threshold = 5.0;
};

// Throws gest::error when a field is out of range.
void validate(const TrackerConfig& config);

enum class GestureKind {
  up,
  down,
  left,
  right,
  zoom_in,
  zoom_out,
  rotate_cw,
  rotate_ccw
};

std::string_view to_string(GestureKind kind);

struct GestureEvent {
  GestureKind kind = GestureKind::up;
  std::size_t frame_index = 0;  // frame that completed the event
  double speed = 0;             // up/down/left/right: pixels per frame
  std::int64_t magnitude = 0;   // zoom_in/zoom_out: |pixel-sum change|
  CartesianPoint center{};      // rotate_cw/rotate_ccw
  double radius = 0;            // rotate_cw/rotate_ccw

  friend bool operator==(const GestureEvent&, const GestureEvent&) = default;
};

struct TrackerState {
  std::optional<CartesianPoint> segment_start_centroid;
  std::optional<CartesianPoint> current_centroid;
  int frames_in_segment = 0;
  int stationary_streak = 0;
  std::optional<std::int64_t> last_white_count;
  std::vector<CartesianPoint> centroid_history;  // up to 3, oldest first
};

// Swipe/scroll classification shared by the tracker and the scenario oracle:
// fires when either axis displacement reaches its threshold, reports the axis
// with the larger magnitude, ties go vertical. Directions are Cartesian
// (dy > 0 is up, dx > 0 is right).
std::optional<GestureKind> classify_swipe(double dx, double dy,
                                          const TrackerConfig& config);

// Frame-subtraction zoom test: sum = white(second) - white(first). Below the
// threshold in magnitude -> no event; negative -> zoom out, else zoom in.
// frame_index is left at zero for the caller to fill.
std::optional<GestureEvent> detect_in_out(const BinaryFrame& first,
                                          const BinaryFrame& second,
                                          std::int64_t zoom_threshold);

// Circle through three consecutive tracked points, filtered by the radius
// band, classified by turn direction. Degenerate input maps to no event.
std::optional<GestureEvent> detect_rotation(CartesianPoint c1,
                                            CartesianPoint c2,
                                            CartesianPoint c3,
                                            const TrackerConfig& config);

// Streaming detector over one frame sequence.
//
// Segment protocol: a segment opens on the first frame with a cluster and
// closes when the tracked centroid has been stationary for the configured
// number of frames or when the clusters leave the view; the close decides
// whether one swipe/scroll event fires. Zoom runs on every consecutive frame
// pair and rotation on every consecutive centroid triple, independent of
// segments. Call finish() once the stream ends so an open segment can close.
//
// One logical stream per tracker; pushes must be sequential.
class Tracker {
 public:
  explicit Tracker(TrackerConfig config);

  // Feed the next frame; returns every event completed at this frame.
  // Throws dimension_error if the frame size changes mid-stream.
  std::vector<GestureEvent> push(const BinaryFrame& frame);

  // End of stream: treated like the clusters leaving the view.
  std::vector<GestureEvent> finish();

  const TrackerState& state() const { return state_; }
  const TrackerConfig& config() const { return config_; }

 private:
  void close_segment(std::vector<GestureEvent>& out, std::size_t frame_index);

  TrackerConfig config_;
  TrackerState state_;
  std::optional<std::pair<int, int>> dims_;
  std::size_t frames_seen_ = 0;
};

}  // namespace gest
