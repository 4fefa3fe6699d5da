#include "gest/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gest {

namespace {

// Relative tolerance for degeneracy checks, scaled by the bounding extent of
// the inputs.
constexpr double kRelEps = 1e-9;

double bounding_extent(CartesianPoint a, CartesianPoint b, CartesianPoint c) {
  const double min_x = std::min({a.x, b.x, c.x});
  const double max_x = std::max({a.x, b.x, c.x});
  const double min_y = std::min({a.y, b.y, c.y});
  const double max_y = std::max({a.y, b.y, c.y});
  return std::max(max_x - min_x, max_y - min_y);
}

double normalize_degrees(double deg) {
  // atan2 yields [-180, 180]; fold the closed lower end onto +180
  if (deg <= -180.0) deg += 360.0;
  return deg;
}

// 3x3 linear solve (augmented matrix), partial pivoting.
void solve3(double m[3][4], double out[3]) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == 0.0)
      throw degenerate_error("singular system in circle fit");
    if (pivot != col)
      for (int k = 0; k < 4; ++k) std::swap(m[pivot][k], m[col][k]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  for (int r = 2; r >= 0; --r) {
    double acc = m[r][3];
    for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * out[k];
    out[r] = acc / m[r][r];
  }
}

}  // namespace

CartesianPoint to_cartesian(PixelCoord p, int frame_height) {
  return {static_cast<double>(p.col),
          static_cast<double>(frame_height - 1 - p.row)};
}

CartesianPoint to_cartesian(double col, double row, int frame_height) {
  return {col, static_cast<double>(frame_height - 1) - row};
}

Alignment detect_alignment(std::span<const CartesianPoint> points,
                           double threshold) {
  if (points.empty()) throw error("detect_alignment: no points");
  double min_x = points[0].x, max_x = points[0].x;
  double min_y = points[0].y, max_y = points[0].y;
  for (const CartesianPoint& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const bool horizontal = (max_y - min_y) <= threshold;
  const bool vertical = (max_x - min_x) <= threshold;
  if (horizontal && vertical) return Alignment::both;
  if (horizontal) return Alignment::horizontal;
  if (vertical) return Alignment::vertical;
  return Alignment::none;
}

double pointing_direction(std::span<const PixelCoord> pixels,
                          int frame_height) {
  if (pixels.empty()) throw error("pointing_direction: no pixels");

  double sum_x = 0;
  double sum_y = 0;
  for (const PixelCoord& p : pixels) {
    const CartesianPoint c = to_cartesian(p, frame_height);
    sum_x += c.x;
    sum_y += c.y;
  }
  const double n = static_cast<double>(pixels.size());
  const double mean_x = sum_x / n;
  const double mean_y = sum_y / n;

  double best_d2 = -1.0;
  PixelCoord best{};
  CartesianPoint best_cart{};
  for (const PixelCoord& p : pixels) {
    const CartesianPoint c = to_cartesian(p, frame_height);
    const double dx = c.x - mean_x;
    const double dy = c.y - mean_y;
    const double d2 = dx * dx + dy * dy;
    const bool closer_in_scan =
        p.row < best.row || (p.row == best.row && p.col < best.col);
    if (d2 > best_d2 || (d2 == best_d2 && closer_in_scan)) {
      best_d2 = d2;
      best = p;
      best_cart = c;
    }
  }

  if (best_d2 <= 0.0)
    throw degenerate_error(
        "pointing_direction: cluster collapses onto its mean");
  const double deg = std::atan2(best_cart.y - mean_y, best_cart.x - mean_x) *
                     (180.0 / std::numbers::pi);
  return normalize_degrees(deg);
}

CircleFit fit_circle(CartesianPoint p1, CartesianPoint p2, CartesianPoint p3) {
  const double extent = bounding_extent(p1, p2, p3);
  const double det =
      (p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x);
  if (std::abs(det) <= kRelEps * extent * extent)
    throw degenerate_error("fit_circle: collinear or coincident points");

  // Solve in coordinates local to the points' centroid; far-from-origin
  // inputs would otherwise wreck the conditioning of the system.
  const double mx = (p1.x + p2.x + p3.x) / 3.0;
  const double my = (p1.y + p2.y + p3.y) / 3.0;
  const CartesianPoint pts[3] = {{p1.x - mx, p1.y - my},
                                 {p2.x - mx, p2.y - my},
                                 {p3.x - mx, p3.y - my}};
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = pts[i].x;
    m[i][1] = pts[i].y;
    m[i][2] = 1.0;
    m[i][3] = -(pts[i].x * pts[i].x + pts[i].y * pts[i].y);
  }
  double coef[3];
  solve3(m, coef);

  const double local_cx = -coef[0] / 2.0;
  const double local_cy = -coef[1] / 2.0;
  const double radius_sq =
      (coef[0] * coef[0] + coef[1] * coef[1]) / 4.0 - coef[2];
  if (!(radius_sq > 0.0))
    throw degenerate_error("fit_circle: degenerate radius");

  CircleFit fit;
  fit.center = {mx + local_cx, my + local_cy};
  fit.radius = std::sqrt(radius_sq);
  fit.x_coef = -2.0 * fit.center.x;
  fit.y_coef = -2.0 * fit.center.y;
  fit.const_coef =
      fit.center.x * fit.center.x + fit.center.y * fit.center.y - radius_sq;
  return fit;
}

RotationSense rotation_sense(CartesianPoint p1, CartesianPoint p2,
                             CartesianPoint p3) {
  if (p1 == p2)
    throw degenerate_error("rotation_sense: first two points coincide");
  const double extent = bounding_extent(p1, p2, p3);
  const double cross =
      (p2.x - p1.x) * (p3.y - p2.y) - (p2.y - p1.y) * (p3.x - p2.x);
  if (std::abs(cross) <= kRelEps * extent * extent)
    throw degenerate_error("rotation_sense: degenerate turn");

  // Rotate the plane so the first segment is axis-aligned; the full-quadrant
  // angle keeps vertical segments regular.
  const double theta = std::atan2(p2.y - p1.y, p2.x - p1.x);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const auto rotate = [c, s](CartesianPoint p) {
    return CartesianPoint{p.x * c + p.y * s, -p.x * s + p.y * c};
  };
  const CartesianPoint r1 = rotate(p1);
  const CartesianPoint r2 = rotate(p2);
  const CartesianPoint r3 = rotate(p3);

  if (r1.x < r2.x)
    return r3.y > r2.y ? RotationSense::anti_clockwise
                       : RotationSense::clockwise;
  return r3.y > r2.y ? RotationSense::clockwise
                     : RotationSense::anti_clockwise;
}

}  // namespace gest
