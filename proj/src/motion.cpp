#include "gest/motion.hpp"

#include <cmath>
#include <string>

namespace gest {

void validate(const TrackerConfig& config) {
  if (config.stationary_frame_limit < 1)
    throw error("stationary_frame_limit must be >= 1");
  if (config.stationary_epsilon < 0)
    throw error("stationary_epsilon must be >= 0");
  if (config.vertical_threshold < 0)
    throw error("vertical_threshold must be >= 0");
  if (config.horizontal_threshold < 0)
    throw error("horizontal_threshold must be >= 0");
  if (config.zoom_threshold < 0) throw error("zoom_threshold must be >= 0");
  if (config.rotation_min_radius < 0)
    throw error("rotation_min_radius must be >= 0");
  if (config.rotation_min_radius > config.rotation_max_radius)
    throw error("rotation_min_radius must not exceed rotation_max_radius");
  if (config.alignment_threshold < 0)
    throw error("alignment_threshold must be >= 0");
  if (config.color_range && !config.color_range->well_formed())
    throw error("color_range bounds must satisfy min <= max per channel");
}

std::string_view to_string(GestureKind kind) {
  switch (kind) {
    case GestureKind::up: return "up";
    case GestureKind::down: return "down";
    case GestureKind::left: return "left";
    case GestureKind::right: return "right";
    case GestureKind::zoom_in: return "zoom_in";
    case GestureKind::zoom_out: return "zoom_out";
    case GestureKind::rotate_cw: return "rotate_cw";
    case GestureKind::rotate_ccw: return "rotate_ccw";
  }
  return "?";
}

std::optional<GestureKind> classify_swipe(double dx, double dy,
                                          const TrackerConfig& config) {
  const double adx = std::abs(dx);
  const double ady = std::abs(dy);
  if (ady < config.vertical_threshold && adx < config.horizontal_threshold)
    return std::nullopt;
  if (ady >= adx) {
    if (ady == 0) return std::nullopt;  // zero thresholds, zero displacement
    return dy > 0 ? GestureKind::up : GestureKind::down;
  }
  return dx > 0 ? GestureKind::right : GestureKind::left;
}

std::optional<GestureEvent> detect_in_out(const BinaryFrame& first,
                                          const BinaryFrame& second,
                                          std::int64_t zoom_threshold) {
  const std::int64_t sum = frame_diff_sum(first, second);
  if (std::abs(sum) < zoom_threshold) return std::nullopt;
  GestureEvent event;
  if (sum < 0) {
    event.kind = GestureKind::zoom_out;
    event.magnitude = -sum;
  } else {
    event.kind = GestureKind::zoom_in;
    event.magnitude = sum;
  }
  return event;
}

std::optional<GestureEvent> detect_rotation(CartesianPoint c1,
                                            CartesianPoint c2,
                                            CartesianPoint c3,
                                            const TrackerConfig& config) {
  CircleFit fit;
  try {
    fit = fit_circle(c1, c2, c3);
  } catch (const degenerate_error&) {
    return std::nullopt;
  }
  if (fit.radius < config.rotation_min_radius ||
      fit.radius > config.rotation_max_radius)
    return std::nullopt;

  RotationSense sense;
  try {
    sense = rotation_sense(c1, c2, c3);
  } catch (const degenerate_error&) {
    return std::nullopt;
  }
  GestureEvent event;
  event.kind = sense == RotationSense::anti_clockwise ? GestureKind::rotate_ccw
                                                      : GestureKind::rotate_cw;
  event.center = fit.center;
  event.radius = fit.radius;
  return event;
}

Tracker::Tracker(TrackerConfig config) : config_(std::move(config)) {
  validate(config_);
}

void Tracker::close_segment(std::vector<GestureEvent>& out,
                            std::size_t frame_index) {
  if (state_.segment_start_centroid && state_.current_centroid) {
    const double dx =
        state_.current_centroid->x - state_.segment_start_centroid->x;
    const double dy =
        state_.current_centroid->y - state_.segment_start_centroid->y;
    if (const auto kind = classify_swipe(dx, dy, config_)) {
      GestureEvent event;
      event.kind = *kind;
      event.frame_index = frame_index;
      const double winning =
          (*kind == GestureKind::up || *kind == GestureKind::down)
              ? std::abs(dy)
              : std::abs(dx);
      event.speed = winning / static_cast<double>(state_.frames_in_segment);
      out.push_back(event);
    }
  }
  state_.segment_start_centroid.reset();
  state_.current_centroid.reset();
  state_.frames_in_segment = 0;
  state_.stationary_streak = 0;
}

std::vector<GestureEvent> Tracker::push(const BinaryFrame& frame) {
  if (!dims_) {
    dims_ = {frame.width(), frame.height()};
  } else if (dims_->first != frame.width() ||
             dims_->second != frame.height()) {
    throw dimension_error(
        "tracker: frame size changed mid-stream from " +
        std::to_string(dims_->first) + "x" + std::to_string(dims_->second) +
        " to " + std::to_string(frame.width()) + "x" +
        std::to_string(frame.height()));
  }
  const std::size_t index = frames_seen_++;
  std::vector<GestureEvent> events;

  const ClusterSet clusters = extract_clusters(frame, config_.connectivity);
  std::optional<CartesianPoint> tracked;
  if (!clusters.clusters.empty()) {
    const Cluster& target = top_left_cluster(clusters);
    tracked =
        to_cartesian(target.centroid_col, target.centroid_row, frame.height());
  }

  // swipe/scroll segment
  if (state_.segment_start_centroid) {
    if (!tracked) {
      close_segment(events, index);  // out of view
    } else {
      const double step_x = tracked->x - state_.current_centroid->x;
      const double step_y = tracked->y - state_.current_centroid->y;
      const double step = std::hypot(step_x, step_y);
      ++state_.frames_in_segment;
      state_.current_centroid = tracked;
      if (step < config_.stationary_epsilon)
        ++state_.stationary_streak;
      else
        state_.stationary_streak = 0;
      if (state_.stationary_streak >= config_.stationary_frame_limit)
        close_segment(events, index);
    }
  } else if (tracked) {
    state_.segment_start_centroid = tracked;
    state_.current_centroid = tracked;
    state_.frames_in_segment = 1;
    state_.stationary_streak = 0;
  }

  // zoom, on every consecutive frame pair
  const std::int64_t white = white_count(frame);
  if (state_.last_white_count) {
    const std::int64_t sum = white - *state_.last_white_count;
    if (std::abs(sum) >= config_.zoom_threshold) {
      GestureEvent event;
      event.kind = sum < 0 ? GestureKind::zoom_out : GestureKind::zoom_in;
      event.magnitude = std::abs(sum);
      event.frame_index = index;
      events.push_back(event);
    }
  }
  state_.last_white_count = white;

  // rotation, on every triple of consecutively tracked centroids
  if (tracked) {
    state_.centroid_history.push_back(*tracked);
    if (state_.centroid_history.size() > 3)
      state_.centroid_history.erase(state_.centroid_history.begin());
  } else {
    state_.centroid_history.clear();
  }
  if (state_.centroid_history.size() == 3) {
    if (auto event = detect_rotation(state_.centroid_history[0],
                                     state_.centroid_history[1],
                                     state_.centroid_history[2], config_)) {
      event->frame_index = index;
      events.push_back(*event);
    }
  }

  return events;
}

std::vector<GestureEvent> Tracker::finish() {
  std::vector<GestureEvent> events;
  if (state_.segment_start_centroid)
    close_segment(events, frames_seen_ == 0 ? 0 : frames_seen_ - 1);
  return events;
}

}  // namespace gest
