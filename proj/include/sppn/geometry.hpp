#pragma once

#include <cmath>
#include <stdexcept>

namespace sppn {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2D {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
  friend bool operator==(const Point2D&, const Point2D&) = default;
};

// Axis-aligned rectangle; zero-area regions are allowed.
struct Region {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  Point2D center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }

  bool contains(Point2D p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  Point2D clamp(Point2D p) const {
    return {std::fmin(std::fmax(p.x, x_min), x_max),
            std::fmin(std::fmax(p.y, y_min), y_max)};
  }

  void validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) ||
        !std::isfinite(y_max))
      throw std::invalid_argument("region: bounds must be finite");
    if (x_max < x_min || y_max < y_min)
      throw std::invalid_argument("region: max bound below min bound");
  }
};

inline double distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

// World bearing of `to` as seen from `from`, in (-pi, pi].
inline double bearing(Point2D from, Point2D to) { return std::atan2(to.y - from.y, to.x - from.x); }

// Wrap into (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::fmod(a + kPi, kTwoPi);
  if (r <= 0.0) r += kTwoPi;
  return r - kPi;
}

// Wrap into [0, 2*pi).
inline double wrap_phase(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace sppn
