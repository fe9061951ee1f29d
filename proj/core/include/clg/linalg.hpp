#pragma once

#include <cmath>

namespace clg {

/// 2-vector, used for gradients of scalar fields and for the coupling
/// argument grad(u) - v.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

/// 2x2 matrix, used for Jacobians of vector fields. Row i holds the
/// gradient of component i: (xx, xy) = grad v1, (yx, yy) = grad v2.
struct Mat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yx = 0.0;
  double yy = 0.0;
};

inline Mat2 operator+(Mat2 a, Mat2 b) {
  return {a.xx + b.xx, a.xy + b.xy, a.yx + b.yx, a.yy + b.yy};
}
inline Mat2 operator-(Mat2 a, Mat2 b) {
  return {a.xx - b.xx, a.xy - b.xy, a.yx - b.yx, a.yy - b.yy};
}
inline Mat2 operator-(Mat2 a) { return {-a.xx, -a.xy, -a.yx, -a.yy}; }
inline Mat2 operator*(double s, Mat2 a) {
  return {s * a.xx, s * a.xy, s * a.yx, s * a.yy};
}

/// Frobenius pairing.
inline double dot(Mat2 a, Mat2 b) {
  return a.xx * b.xx + a.xy * b.xy + a.yx * b.yx + a.yy * b.yy;
}
inline double norm(Mat2 a) { return std::sqrt(dot(a, a)); }

inline bool all_finite(Vec2 a) {
  return std::isfinite(a.x) && std::isfinite(a.y);
}
inline bool all_finite(Mat2 a) {
  return std::isfinite(a.xx) && std::isfinite(a.xy) && std::isfinite(a.yx) &&
         std::isfinite(a.yy);
}

}  // namespace clg
