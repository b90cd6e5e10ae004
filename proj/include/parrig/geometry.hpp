#pragma once

#include <cmath>
#include <stdexcept>

namespace parrig {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Clockwise rotation by t radians: maps (0,1) to (sin t, cos t).
inline Vec2 rotate_cw(double t, Vec2 v) {
  double c = std::cos(t), s = std::sin(t);
  return {c * v.x + s * v.y, -s * v.x + c * v.y};
}

/// Counterclockwise rotation by t radians.
inline Vec2 rotate_ccw(double t, Vec2 v) {
  double c = std::cos(t), s = std::sin(t);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Counterclockwise quarter turn: (x,y) -> (-y,x).
inline Vec2 quarter_turn(Vec2 v) { return {-v.y, v.x}; }

enum class NumericMode { Float, ExactRational };

struct ToleranceConfig {
  double eps = 1e-9;
  NumericMode mode = NumericMode::Float;

  // eps must be >= 0, and 0 only makes sense when comparisons are exact.
  void validate() const {
    if (eps < 0.0) throw std::invalid_argument("tolerance eps must be non-negative");
    if (eps == 0.0 && mode != NumericMode::ExactRational)
      throw std::invalid_argument("eps = 0 requires exact-rational mode");
  }
};

}  // namespace parrig
