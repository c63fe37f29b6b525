#include "reebcirc/geom.hpp"

#include <algorithm>

namespace reebcirc {

CircleIntersections circle_circle_intersections(const Circle& a, const Circle& b,
                                                const Tolerance& tol) {
  const double d = dist(a.center, b.center);
  if (d <= tol.eps_abs && std::abs(a.radius - b.radius) <= tol.eps_abs)
    throw IdenticalCircles("circle_circle_intersections: circles coincide within tolerance");

  CircleIntersections out;
  const double sum = a.radius + b.radius;
  const double diff = std::abs(a.radius - b.radius);

  // Tangency band: |d - sum| or |d - diff| within slack. eps_abs is a slack
  // on the quadratic constraint values, which near contact is ~2r*dist, so
  // compare distances against eps_abs directly (radii are O(1) here).
  if (std::abs(d - sum) <= tol.eps_abs || (d > tol.eps_abs && std::abs(d - diff) <= tol.eps_abs)) {
    Point u = normalized(b.center - a.center);
    double s = (d >= std::max(a.radius, b.radius)) ? 1.0 : (a.radius >= b.radius ? 1.0 : -1.0);
    out.points.push_back(a.center + (s * a.radius) * u);
    out.tangent = true;
    return out;
  }
  if (d > sum || d < diff) return out;  // disjoint (externally or nested)

  const double alpha = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double h2 = a.radius * a.radius - alpha * alpha;
  const double h = std::sqrt(std::max(0.0, h2));
  Point u = normalized(b.center - a.center);
  Point base = a.center + alpha * u;
  Point n = perp(u);
  out.points.push_back(base + h * n);
  out.points.push_back(base - h * n);
  return out;
}

bool is_transversal(Point p, const Circle& a, const Circle& b, const Tolerance& tol) {
  // On-circle check in equation-value terms (|f| <= eps).
  if (std::abs(a.eval_inside(p)) > 10 * tol.eps_abs * std::max(1.0, a.radius) ||
      std::abs(b.eval_inside(p)) > 10 * tol.eps_abs * std::max(1.0, b.radius))
    throw PointNotOnCircles("is_transversal: point not on both circles");

  Point ra = normalized(p - a.center);
  Point rb = normalized(p - b.center);
  // Tangent lines are perpendicular to the radial directions, so the angle
  // between the lines equals the angle between the radials, folded to [0,pi/2].
  double c = std::clamp(std::abs(dot(ra, rb)), 0.0, 1.0);
  return std::acos(c) > tol.eps_angle;
}

std::pair<Point, Point> axis_extreme_points(const Circle& c, Axis axis) {
  if (axis == Axis::Horizontal)
    return {Point{c.center.x - c.radius, c.center.y}, Point{c.center.x + c.radius, c.center.y}};
  return {Point{c.center.x, c.center.y - c.radius}, Point{c.center.x, c.center.y + c.radius}};
}

}  // namespace reebcirc
