#include "gest/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "json.hpp"

namespace gest {

namespace {

struct Disc {
  double cx = 0;  // Cartesian
  double cy = 0;
  double r = 0;
};

std::vector<Disc> discs_at(const Scenario& sc, int t) {
  std::vector<Disc> discs;
  if (const auto* lin = std::get_if<LinearMotion>(&sc.shape)) {
    discs.push_back({lin->start.x + t * lin->velocity_x,
                     lin->start.y + t * lin->velocity_y, lin->disc_radius});
  } else if (const auto* circ = std::get_if<CircularMotion>(&sc.shape)) {
    const double angle =
        t * circ->angular_velocity * std::numbers::pi / 180.0;
    discs.push_back({circ->center.x + circ->radius * std::cos(angle),
                     circ->center.y + circ->radius * std::sin(angle),
                     circ->disc_radius});
  } else if (const auto* scale = std::get_if<ScalingDisc>(&sc.shape)) {
    const double span = scale->radius_end - scale->radius_start;
    const double radius =
        sc.frame_count == 1
            ? scale->radius_start
            : scale->radius_start + span * t / (sc.frame_count - 1);
    discs.push_back({scale->center.x, scale->center.y, radius});
  } else {
    const auto& st = std::get<StaticDiscs>(sc.shape);
    for (const CartesianPoint& c : st.disc_centers)
      discs.push_back({c.x, c.y, st.disc_radius});
  }
  return discs;
}

void validate_scenario(const Scenario& sc) {
  if (sc.width < 1 || sc.height < 1)
    throw error("scenario: width and height must be positive");
  if (sc.frame_count < 1) throw error("scenario: frame_count must be >= 1");
  if (!(sc.speckle_fraction >= 0.0 && sc.speckle_fraction <= 1.0))
    throw error("scenario: speckle_fraction must lie in [0, 1]");
  for (int t = 0; t < sc.frame_count; ++t) {
    for (const Disc& d : discs_at(sc, t)) {
      if (!(d.r >= 0) || !std::isfinite(d.cx) || !std::isfinite(d.cy))
        throw error("scenario: disc parameters must be finite, radius >= 0");
      if (d.cx - d.r < 0 || d.cx + d.r > sc.width - 1 || d.cy - d.r < 0 ||
          d.cy + d.r > sc.height - 1)
        throw error("scenario: disc leaves the frame at step " +
                    std::to_string(t));
    }
  }
}

void rasterize_disc(BinaryFrame& frame, const Disc& d) {
  const int h = frame.height();
  const int col_lo = std::max(0, static_cast<int>(std::ceil(d.cx - d.r)));
  const int col_hi =
      std::min(frame.width() - 1, static_cast<int>(std::floor(d.cx + d.r)));
  const int y_lo = std::max(0, static_cast<int>(std::ceil(d.cy - d.r)));
  const int y_hi = std::min(h - 1, static_cast<int>(std::floor(d.cy + d.r)));
  const double r2 = d.r * d.r;
  for (int y = y_lo; y <= y_hi; ++y) {
    const double dy = y - d.cy;
    for (int col = col_lo; col <= col_hi; ++col) {
      const double dx = col - d.cx;
      if (dx * dx + dy * dy <= r2) frame.set_bit(col, h - 1 - y, true);
    }
  }
}

}  // namespace

std::vector<BinaryFrame> generate(const Scenario& scenario) {
  validate_scenario(scenario);
  std::vector<BinaryFrame> frames;
  frames.reserve(scenario.frame_count);
  std::mt19937_64 rng(scenario.seed);
  const auto speckles = static_cast<std::int64_t>(
      scenario.speckle_fraction * scenario.width * scenario.height);
  for (int t = 0; t < scenario.frame_count; ++t) {
    BinaryFrame frame(scenario.width, scenario.height);
    for (const Disc& d : discs_at(scenario, t)) rasterize_disc(frame, d);
    for (std::int64_t i = 0; i < speckles; ++i) {
      const auto col = static_cast<int>(rng() % scenario.width);
      const auto row = static_cast<int>(rng() % scenario.height);
      frame.set_bit(col, row, true);
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::vector<GestureKind> expected_events(const Scenario& scenario,
                                         const TrackerConfig& config) {
  std::vector<GestureKind> kinds;
  if (const auto* lin = std::get_if<LinearMotion>(&scenario.shape)) {
    const double steps = scenario.frame_count - 1;
    if (const auto kind = classify_swipe(lin->velocity_x * steps,
                                         lin->velocity_y * steps, config))
      kinds.push_back(*kind);
  } else if (const auto* circ = std::get_if<CircularMotion>(&scenario.shape)) {
    const double step = std::fmod(std::abs(circ->angular_velocity), 360.0);
    const bool turning = step != 0.0 && step != 180.0;
    if (scenario.frame_count >= 3 && turning &&
        circ->radius >= config.rotation_min_radius &&
        circ->radius <= config.rotation_max_radius)
      kinds.push_back(circ->angular_velocity > 0 ? GestureKind::rotate_ccw
                                                 : GestureKind::rotate_cw);
  } else if (std::holds_alternative<ScalingDisc>(scenario.shape)) {
    // decide from the actual rasterized pixel counts
    const std::vector<BinaryFrame> frames = generate(scenario);
    std::int64_t grow = 0;
    std::int64_t shrink = 0;
    for (std::size_t i = 1; i < frames.size(); ++i) {
      const std::int64_t sum = frame_diff_sum(frames[i - 1], frames[i]);
      grow = std::max(grow, sum);
      shrink = std::min(shrink, sum);
    }
    if (grow >= config.zoom_threshold) kinds.push_back(GestureKind::zoom_in);
    if (-shrink >= config.zoom_threshold)
      kinds.push_back(GestureKind::zoom_out);
  }
  // StaticDiscs: nothing
  return kinds;
}

namespace {

using nlohmann::json;

double number_field(const json& j, const std::string& key) {
  if (!j.contains(key)) throw error("scenario: missing field \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) throw error("scenario: \"" + key + "\" must be a number");
  return v.get<double>();
}

CartesianPoint point_field(const json& j, const std::string& key) {
  if (!j.contains(key)) throw error("scenario: missing field \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_object() || !v.contains("x") || !v.contains("y") ||
      !v.at("x").is_number() || !v.at("y").is_number())
    throw error("scenario: \"" + key + "\" must be {\"x\": .., \"y\": ..}");
  return {v.at("x").get<double>(), v.at("y").get<double>()};
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed) {
  for (const auto& item : j.items())
    if (!allowed.contains(item.key()))
      throw error("scenario: unknown field \"" + item.key() + "\"");
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw error(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw error("scenario: expected a JSON object");
  if (!j.contains("variant") || !j.at("variant").is_string())
    throw error("scenario: missing string field \"variant\"");

  Scenario sc;
  const std::set<std::string> common = {"variant", "frame_count", "width",
                                        "height", "seed", "speckle_fraction"};
  const std::string variant = j.at("variant").get<std::string>();

  if (variant == "LinearMotion") {
    std::set<std::string> allowed = common;
    allowed.insert({"start", "velocity", "disc_radius"});
    reject_unknown_keys(j, allowed);
    LinearMotion lin;
    lin.start = point_field(j, "start");
    if (!j.contains("velocity") || !j.at("velocity").is_array() ||
        j.at("velocity").size() != 2 || !j.at("velocity")[0].is_number() ||
        !j.at("velocity")[1].is_number())
      throw error("scenario: \"velocity\" must be [vx, vy]");
    lin.velocity_x = j.at("velocity")[0].get<double>();
    lin.velocity_y = j.at("velocity")[1].get<double>();
    lin.disc_radius = number_field(j, "disc_radius");
    sc.shape = lin;
  } else if (variant == "CircularMotion") {
    std::set<std::string> allowed = common;
    allowed.insert({"center", "radius", "angular_velocity", "disc_radius"});
    reject_unknown_keys(j, allowed);
    CircularMotion circ;
    circ.center = point_field(j, "center");
    circ.radius = number_field(j, "radius");
    circ.angular_velocity = number_field(j, "angular_velocity");
    circ.disc_radius = number_field(j, "disc_radius");
    sc.shape = circ;
  } else if (variant == "ScalingDisc") {
    std::set<std::string> allowed = common;
    allowed.insert({"center", "radius_start", "radius_end"});
    reject_unknown_keys(j, allowed);
    ScalingDisc scale;
    scale.center = point_field(j, "center");
    scale.radius_start = number_field(j, "radius_start");
    scale.radius_end = number_field(j, "radius_end");
    sc.shape = scale;
  } else if (variant == "Static") {
    std::set<std::string> allowed = common;
    allowed.insert({"disc_centers", "disc_radius"});
    reject_unknown_keys(j, allowed);
    StaticDiscs st;
    if (!j.contains("disc_centers") || !j.at("disc_centers").is_array())
      throw error("scenario: \"disc_centers\" must be an array of points");
    for (const json& p : j.at("disc_centers")) {
      if (!p.is_object() || !p.contains("x") || !p.contains("y") ||
          !p.at("x").is_number() || !p.at("y").is_number())
        throw error("scenario: disc_centers entries must be {\"x\",\"y\"}");
      st.disc_centers.push_back(
          {p.at("x").get<double>(), p.at("y").get<double>()});
    }
    st.disc_radius = number_field(j, "disc_radius");
    sc.shape = st;
  } else {
    throw error("scenario: unknown variant \"" + variant + "\"");
  }

  const double frame_count = number_field(j, "frame_count");
  const double width = number_field(j, "width");
  const double height = number_field(j, "height");
  sc.frame_count = static_cast<int>(frame_count);
  sc.width = static_cast<int>(width);
  sc.height = static_cast<int>(height);
  if (j.contains("seed")) sc.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("speckle_fraction"))
    sc.speckle_fraction = number_field(j, "speckle_fraction");
  return sc;
}

}  // namespace gest
