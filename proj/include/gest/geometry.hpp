#pragma once

#include <span>

#include "gest/error.hpp"
#include "gest/frame.hpp"

namespace gest {

// Math-style coordinates: x grows rightward, y grows upward.
struct CartesianPoint {
  double x = 0;
  double y = 0;

  friend bool operator==(const CartesianPoint&, const CartesianPoint&) = default;
};

enum class Alignment { horizontal, vertical, both, none };
enum class RotationSense { clockwise, anti_clockwise };

// x^2 + y^2 + x_coef*x + y_coef*y + const_coef = 0, together with the
// derived center/radius form:
//   center = (-x_coef/2, -y_coef/2)
//   radius^2 = (x_coef^2 + y_coef^2)/4 - const_coef
struct CircleFit {
  double x_coef = 0;
  double y_coef = 0;
  double const_coef = 0;
  CartesianPoint center{};
  double radius = 0;
};

// The one documented y-flip between image rows and Cartesian coordinates:
// x = col, y = (frame_height - 1) - row. An involution on the pixel grid.
CartesianPoint to_cartesian(PixelCoord p, int frame_height);
CartesianPoint to_cartesian(double col, double row, int frame_height);

// Horizontal when the y spread stays within the threshold, vertical when the
// x spread does; both/none accordingly. Throws gest::error on an empty list.
Alignment detect_alignment(std::span<const CartesianPoint> points,
                           double threshold);

// Inclination, in degrees, of the ray from the pixel mean to the farthest
// member pixel, counterclockwise from +x, normalized to (-180, 180].
// Distance ties break toward the smallest (row, col). Throws
// degenerate_error when every pixel coincides with the mean.
double pointing_direction(std::span<const PixelCoord> pixels,
                          int frame_height);

// Circle through three points, solved from the linear system the circle
// equation induces. Throws degenerate_error on collinear or coincident input.
CircleFit fit_circle(CartesianPoint p1, CartesianPoint p2, CartesianPoint p3);

// Turn direction of the path p1 -> p2 -> p3: the segment p1->p2 is rotated
// onto the +x axis and the third point classified against it. Agrees with
// the sign of the cross product (p2-p1) x (p3-p2). Throws degenerate_error
// when the three points are (nearly) collinear.
RotationSense rotation_sense(CartesianPoint p1, CartesianPoint p2,
                             CartesianPoint p3);

}  // namespace gest
