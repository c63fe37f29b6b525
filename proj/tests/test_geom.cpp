#include <doctest.h>

#include <cmath>

#include "reebcirc/geom.hpp"

using namespace reebcirc;

namespace {
const Tolerance tol{};
}

TEST_CASE("two unit circles intersect symmetrically") {
  Circle a{{0, 0}, 1}, b{{1, 0}, 1};
  auto res = circle_circle_intersections(a, b, tol);
  REQUIRE(res.points.size() == 2);
  CHECK(!res.tangent);
  double s3 = std::sqrt(3.0) / 2.0;
  // order-insensitive
  bool up_first = res.points[0].y > 0;
  Point up = up_first ? res.points[0] : res.points[1];
  Point dn = up_first ? res.points[1] : res.points[0];
  CHECK(up.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(up.y == doctest::Approx(s3).epsilon(1e-12));
  CHECK(dn.y == doctest::Approx(-s3).epsilon(1e-12));

  // residual invariant: points satisfy both equations within 10 eps
  for (Point p : res.points) {
    CHECK(std::abs(a.eval_inside(p)) <= 10 * tol.eps_abs);
    CHECK(std::abs(b.eval_inside(p)) <= 10 * tol.eps_abs);
  }

  // symmetry in the arguments
  auto rev = circle_circle_intersections(b, a, tol);
  REQUIRE(rev.points.size() == 2);
  for (Point p : rev.points) {
    bool found = false;
    for (Point q : res.points) found |= dist(p, q) < 1e-12;
    CHECK(found);
  }
}

TEST_CASE("disjoint and tangent circle pairs") {
  Circle a{{0, 0}, 1};
  CHECK(circle_circle_intersections(a, Circle{{3, 0}, 1}, tol).points.empty());

  auto t = circle_circle_intersections(a, Circle{{2, 0}, 1}, tol);
  REQUIRE(t.points.size() == 1);
  CHECK(t.tangent);
  CHECK(t.points[0].x == doctest::Approx(1.0));
  CHECK(t.points[0].y == doctest::Approx(0.0));

  CHECK_THROWS_AS(circle_circle_intersections(a, Circle{{0, 0}, 1}, tol), IdenticalCircles);
}

TEST_CASE("transversality predicate") {
  Circle a{{0, 0}, 1}, b{{1, 0}, 1};
  Point p{0.5, std::sqrt(3.0) / 2.0};
  CHECK(is_transversal(p, a, b, tol));
  CHECK(is_transversal(p, b, a, tol));  // symmetric

  Circle c{{2, 0}, 1};
  CHECK(!is_transversal(Point{1, 0}, a, c, tol));

  // computed crossing of the unit circle with circle((0,1),0.5)
  double y = 0.875, x = std::sqrt(1 - y * y);
  CHECK(is_transversal(Point{x, y}, a, Circle{{0, 1}, 0.5}, tol));

  CHECK_THROWS_AS(is_transversal(Point{0, 0}, a, b, tol), PointNotOnCircles);
}

TEST_CASE("axis extreme points") {
  Circle a{{0, 0}, 1};
  auto [l, r] = axis_extreme_points(a, Axis::Horizontal);
  CHECK(l.x == -1.0);
  CHECK(l.y == 0.0);
  CHECK(r.x == 1.0);

  Circle b{{0, 1}, 0.5};
  auto [bl, br] = axis_extreme_points(b, Axis::Horizontal);
  CHECK(bl.x == -0.5);
  CHECK(bl.y == 1.0);
  CHECK(br.x == 0.5);
  auto [bd, bu] = axis_extreme_points(b, Axis::Vertical);
  CHECK(bd.y == 0.5);
  CHECK(bu.y == 1.5);
  // outputs lie on the circle exactly
  CHECK(b.eval_inside(bd) == 0.0);
  CHECK(b.eval_inside(bu) == 0.0);
}
