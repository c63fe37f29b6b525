#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "reebcirc/errors.hpp"

namespace reebcirc {

/// Comparison slack used by every geometric predicate. eps_abs applies to
/// constraint values f_j (quadratic in the coordinates), eps_angle is the
/// minimum crossing angle (radians) accepted as transversal.
struct Tolerance {
  double eps_abs = 1e-9;
  double eps_angle = 1e-4;

  void check() const {
    if (!(eps_abs > 0.0 && eps_abs < 1e-3)) throw Error("Tolerance: eps_abs out of range");
    if (!(eps_angle > 0.0 && eps_angle < 0.1)) throw Error("Tolerance: eps_angle out of range");
  }
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point p) { return {-p.y, p.x}; }
inline Point normalized(Point p) {
  double n = norm(p);
  return n > 0 ? Point{p.x / n, p.y / n} : Point{0, 0};
}

struct Circle {
  Point center;
  double radius = 1.0;

  Point at(double theta) const {
    return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
  }
  double angle_of(Point p) const { return std::atan2(p.y - center.y, p.x - center.x); }
  /// Signed equation value r^2 - |p-c|^2: positive inside, zero on the circle.
  double eval_inside(Point p) const {
    Point d = p - center;
    return radius * radius - (d.x * d.x + d.y * d.y);
  }
};

enum class Axis { Horizontal, Vertical };

inline double sweep_coord(Axis a, Point p) { return a == Axis::Horizontal ? p.x : p.y; }
inline double transverse_coord(Axis a, Point p) { return a == Axis::Horizontal ? p.y : p.x; }
inline Point make_point(Axis a, double u, double t) {
  return a == Axis::Horizontal ? Point{u, t} : Point{t, u};
}
inline double center_sweep(Axis a, const Circle& c) { return sweep_coord(a, c.center); }
inline double center_transverse(Axis a, const Circle& c) { return transverse_coord(a, c.center); }

struct CircleIntersections {
  std::vector<Point> points;  // 0, 1 or 2 points
  bool tangent = false;       // set when the single point is a tangency
};

/// Common points of two circles. Throws IdenticalCircles when centers and
/// radii coincide within tolerance. A tangency is returned as one point with
/// the degeneracy flag set; callers decide whether that is acceptable.
CircleIntersections circle_circle_intersections(const Circle& a, const Circle& b,
                                                const Tolerance& tol);

/// True when the tangent lines of the two circles at p cross at an angle
/// above tol.eps_angle. p must lie on both circles (PointNotOnCircles).
bool is_transversal(Point p, const Circle& a, const Circle& b, const Tolerance& tol);

/// The two critical points of the axis projection restricted to the circle,
/// ordered by sweep coordinate (min first).
std::pair<Point, Point> axis_extreme_points(const Circle& c, Axis axis);

}  // namespace reebcirc
