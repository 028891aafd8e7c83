#ifndef CIRCLESPEC_ANGLE_HPP
#define CIRCLESPEC_ANGLE_HPP

#include <cmath>
#include <numbers>

namespace circlespec {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to the canonical fundamental domain [-pi, pi).
inline double reduce_angle(double x) {
  double r = x - two_pi * std::floor((x + pi) / two_pi);
  // floor can land exactly on the upper edge for x just below a wrap point
  if (r >= pi) r -= two_pi;
  if (r < -pi) r += two_pi;
  return r;
}

/// Quotient metric on the circle: d(a,b) = min_k |a - b + 2*pi*k|.
inline double circle_distance(double a, double b) {
  return std::abs(reduce_angle(a - b));
}

}  // namespace circlespec

#endif
