#include "reebcirc/region.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>

namespace reebcirc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

// Union of non-wrapping angle intervals inside [0, 2pi), kept sorted.
struct AngleSet {
  std::vector<std::pair<double, double>> arcs;

  static AngleSet full() { return AngleSet{{{0.0, kTwoPi}}}; }

  void intersect_arc(double lo, double hi) {  // one arc, may wrap
    std::vector<std::pair<double, double>> cap;
    lo = wrap_angle(lo);
    hi = wrap_angle(hi);
    if (hi >= lo) {
      cap.push_back({lo, hi});
    } else {
      cap.push_back({0.0, hi});
      cap.push_back({lo, kTwoPi});
    }
    std::vector<std::pair<double, double>> out;
    for (auto& a : arcs)
      for (auto& c : cap) {
        double s = std::max(a.first, c.first), e = std::min(a.second, c.second);
        if (s <= e) out.push_back({s, e});
      }
    std::sort(out.begin(), out.end());
    arcs = std::move(out);
  }

  bool empty() const { return arcs.empty(); }

  // Merge arcs touching at 0/2pi and adjacent splits back into maximal arcs.
  std::vector<std::pair<double, double>> maximal(double tol) const {
    if (arcs.empty()) return {};
    auto merged = arcs;
    std::vector<std::pair<double, double>> out;
    for (auto& a : merged) {
      if (!out.empty() && a.first - out.back().second <= tol)
        out.back().second = std::max(out.back().second, a.second);
      else
        out.push_back(a);
    }
    // wrap join: last arc ending at 2pi meets first arc starting at 0
    if (out.size() > 1 && out.front().first <= tol && kTwoPi - out.back().second <= tol) {
      out.front().first = out.back().first - kTwoPi;
      out.pop_back();
    }
    if (out.size() == 1 && out[0].second - out[0].first >= kTwoPi - tol) return {{0.0, kTwoPi}};
    return out;
  }
};

}  // namespace

std::string ValidityReport::str() const {
  std::ostringstream os;
  for (const auto& s : issues) os << s << "\n";
  return os.str();
}

SSRegion::SSRegion(std::vector<HalfConstraint> constraints, Point seed, Tolerance tol)
    : constraints_(std::move(constraints)), seed_(seed), tol_(tol) {
  tol_.check();
}

SSRegion SSRegion::with_constraint(HalfConstraint hc) const {
  std::vector<HalfConstraint> cs = constraints_;
  cs.push_back(hc);
  return SSRegion(std::move(cs), seed_, tol_);
}

PointClass SSRegion::classify(Point p) const {
  double mn = std::numeric_limits<double>::infinity();
  for (const auto& c : constraints_) mn = std::min(mn, c.eval(p));
  if (mn > tol_.eps_abs) return PointClass::Interior;
  if (mn >= -tol_.eps_abs) return PointClass::Boundary;
  return PointClass::Exterior;
}

IntervalSet SSRegion::fiber(double u, Axis axis) const {
  bool bounded = false;
  IntervalSet set;
  // Intersect the KeepInside bands first so the set starts bounded.
  for (const auto& c : constraints_) {
    if (c.side != Side::KeepInside) continue;
    double du = u - center_sweep(axis, c.circle);
    double disc = c.circle.radius * c.circle.radius - du * du;
    if (disc < 0) return {};
    double s = std::sqrt(disc);
    double ct = center_transverse(axis, c.circle);
    if (!bounded) {
      set = IntervalSet(Interval{ct - s, ct + s});
      bounded = true;
    } else {
      set.clip(ct - s, ct + s);
    }
  }
  if (!bounded) throw InvalidRegion("fiber: region unbounded (no keep_inside constraint)");
  for (const auto& c : constraints_) {
    if (c.side != Side::KeepOutside) continue;
    double du = u - center_sweep(axis, c.circle);
    double disc = c.circle.radius * c.circle.radius - du * du;
    if (disc <= 0) continue;
    double s = std::sqrt(disc);
    double ct = center_transverse(axis, c.circle);
    set.subtract_open(ct - s, ct + s);
  }
  return set;
}

std::vector<SingularPoint> SSRegion::singular_points(Axis axis) const {
  const int l = size();
  const double eps = tol_.eps_abs;
  std::vector<SingularPoint> out;

  auto on_closure_strict_others = [&](Point p, int skip0, int skip1) {
    // Returns 1 if p is on the closure with every other constraint strictly
    // positive, 0 if clearly off the closure, -1 for a near-degenerate touch.
    for (int k = 0; k < l; ++k) {
      if (k == skip0 || k == skip1) continue;
      double v = constraints_[k].eval(p);
      if (v < -eps) return 0;
      if (v <= eps) return -1;
    }
    return 1;
  };

  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      auto inter = circle_circle_intersections(constraints_[i].circle, constraints_[j].circle, tol_);
      for (Point p : inter.points) {
        int st = on_closure_strict_others(p, i, j);
        if (st == 0) continue;
        if (st < 0)
          throw GenericityViolation("singular_points: triple point near (" +
                                    std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
        if (inter.tangent)
          throw GenericityViolation("singular_points: tangent circle contact on the boundary");
        if (!is_transversal(p, constraints_[i].circle, constraints_[j].circle, tol_))
          throw GenericityViolation("singular_points: non-transversal crossing on the boundary");
        out.push_back({p, SingularKind::DoublePoint, i, j, axis});
      }
    }
  }

  for (int j = 0; j < l; ++j) {
    auto [pmin, pmax] = axis_extreme_points(constraints_[j].circle, axis);
    for (Point p : {pmin, pmax}) {
      int st = on_closure_strict_others(p, j, -1);
      if (st == 1) out.push_back({p, SingularKind::Tangency, j, -1, axis});
      // A near-touch of another circle at the extreme point is left to the
      // double-point bookkeeping; the extreme itself is not a clean tangency.
    }
  }

  // Dedupe (a point can re-enter via symmetric pair enumeration).
  std::vector<SingularPoint> dedup;
  for (const auto& s : out) {
    bool seen = false;
    for (const auto& d : dedup)
      if (d.same_as(s, 10 * eps)) {
        seen = true;
        break;
      }
    if (!seen) dedup.push_back(s);
  }
  return dedup;
}

Interval SSRegion::bounds(Axis axis) const {
  bool any = false;
  Interval b{0, 0};
  for (const auto& c : constraints_) {
    if (c.side != Side::KeepInside) continue;
    double cs = center_sweep(axis, c.circle);
    Interval bb{cs - c.circle.radius, cs + c.circle.radius};
    if (!any) {
      b = bb;
      any = true;
    } else {
      b.lo = std::max(b.lo, bb.lo);
      b.hi = std::min(b.hi, bb.hi);
    }
  }
  if (!any) throw InvalidRegion("bounds: region unbounded");
  return b;
}

double SSRegion::min_feature_size() const {
  const int l = size();
  double feat = std::numeric_limits<double>::infinity();
  for (const auto& c : constraints_) feat = std::min(feat, c.circle.radius);

  std::vector<Point> pts;
  auto on_closure = [&](Point p) {
    for (const auto& c : constraints_)
      if (c.eval(p) < -tol_.eps_abs) return false;
    return true;
  };
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      CircleIntersections inter;
      try {
        inter = circle_circle_intersections(constraints_[i].circle, constraints_[j].circle, tol_);
      } catch (const IdenticalCircles&) {
        continue;
      }
      for (Point p : inter.points)
        if (on_closure(p)) pts.push_back(p);
    }
  for (Axis ax : {Axis::Horizontal, Axis::Vertical})
    for (const auto& c : constraints_) {
      auto [a, b] = axis_extreme_points(c.circle, ax);
      for (Point p : {a, b})
        if (on_closure(p)) pts.push_back(p);
    }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double d = dist(pts[i], pts[j]);
      if (d > 10 * tol_.eps_abs) feat = std::min(feat, d);
    }
  return feat;
}

void SSRegion::genericity_checks(ValidityReport& rep) const {
  const int l = size();
  const double eps = tol_.eps_abs;

  for (int j = 0; j < l; ++j) {
    const Circle& c = constraints_[j].circle;
    if (!finite(c.center) || !std::isfinite(c.radius))
      rep.issues.push_back("constraint " + std::to_string(j) + ": non-finite circle");
    else if (c.radius <= eps)
      rep.issues.push_back("constraint " + std::to_string(j) + ": radius below tolerance");
  }
  if (!finite(seed_)) rep.issues.push_back("seed: non-finite coordinates");
  if (!rep.ok()) return;

  for (int j = 0; j < l; ++j)
    if (constraints_[j].eval(seed_) <= eps) {
      rep.issues.push_back("seed not strictly inside constraint " + std::to_string(j));
    }

  bool bounded = false;
  for (const auto& c : constraints_) bounded |= (c.side == Side::KeepInside);
  if (!bounded) rep.issues.push_back("region unbounded: no keep_inside constraint");

  auto on_closure = [&](Point p) {
    for (const auto& c : constraints_)
      if (c.eval(p) < -eps) return false;
    return true;
  };

  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      CircleIntersections inter;
      try {
        inter = circle_circle_intersections(constraints_[i].circle, constraints_[j].circle, tol_);
      } catch (const IdenticalCircles&) {
        rep.issues.push_back("constraints " + std::to_string(i) + "," + std::to_string(j) +
                             ": identical circles");
        continue;
      }
      for (Point p : inter.points) {
        if (!on_closure(p)) continue;
        if (inter.tangent) {
          rep.issues.push_back("constraints " + std::to_string(i) + "," + std::to_string(j) +
                               ": transversality violation (tangent contact on boundary)");
          continue;
        }
        if (!is_transversal(p, constraints_[i].circle, constraints_[j].circle, tol_))
          rep.issues.push_back("constraints " + std::to_string(i) + "," + std::to_string(j) +
                               ": transversality violation (grazing crossing on boundary)");
        for (int k = 0; k < l; ++k) {
          if (k == i || k == j) continue;
          double v = constraints_[k].eval(p);
          if (v >= -eps && v <= eps)
            rep.issues.push_back("constraints " + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ": triple point on boundary");
        }
      }
    }

  for (int j = 0; j < l; ++j) {
    if (!boundary_arcs_nonempty_(j))
      rep.issues.push_back("constraint " + std::to_string(j) + ": circle does not meet region closure");
  }
}

// Private helper declared inline here to keep boundary_arcs reusable.
namespace {
AngleSet allowed_angles(const std::vector<HalfConstraint>& cons, int j, const Tolerance& tol) {
  const Circle& cj = cons[j].circle;
  AngleSet set = AngleSet::full();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (static_cast<int>(i) == j) continue;
    const Circle& ci = cons[i].circle;
    double d = dist(cj.center, ci.center);
    bool inside_allowed = cons[i].side == Side::KeepInside;
    // Angular cap of circle j inside circle i (|p - ci.center| <= ri).
    if (d <= tol.eps_abs) {
      bool whole_inside = cj.radius <= ci.radius;  // concentric
      if (whole_inside != inside_allowed) return AngleSet{};
      continue;
    }
    if (d + cj.radius <= ci.radius) {  // j entirely inside i
      if (!inside_allowed) return AngleSet{};
      continue;
    }
    if (d - cj.radius >= ci.radius) {  // j entirely outside i
      if (inside_allowed) return AngleSet{};
      continue;
    }
    double ca = (d * d + cj.radius * cj.radius - ci.radius * ci.radius) / (2.0 * d * cj.radius);
    ca = std::clamp(ca, -1.0, 1.0);
    double half = std::acos(ca);
    double phi = std::atan2(ci.center.y - cj.center.y, ci.center.x - cj.center.x);
    if (inside_allowed)
      set.intersect_arc(phi - half, phi + half);
    else
      set.intersect_arc(phi + half, phi - half + kTwoPi);
    if (set.empty()) return set;
  }
  return set;
}
}  // namespace

bool SSRegion::boundary_arcs_nonempty_(int j) const {
  return !allowed_angles(constraints_, j, tol_).empty();
}

std::vector<std::pair<double, double>> SSRegion::boundary_arcs(int j) const {
  if (j < 0 || j >= size()) throw Error("boundary_arcs: constraint index out of range");
  return allowed_angles(constraints_, j, tol_).maximal(1e-12);
}

ValidityReport SSRegion::validate_fast() const {
  ValidityReport rep;
  genericity_checks(rep);
  return rep;
}

ValidityReport SSRegion::validate() const {
  ValidityReport rep;
  genericity_checks(rep);
  if (!rep.ok()) return rep;

  // Connectivity and cell-equals-component, by flood fill on an adaptive grid.
  Interval bx = bounds(Axis::Horizontal), by = bounds(Axis::Vertical);
  if (bx.width() <= 0 || by.width() <= 0) {
    rep.issues.push_back("empty cell bounding box");
    return rep;
  }
  double feat = min_feature_size();
  int n = 256;
  double span = std::max(bx.width(), by.width());
  while (n < 4096 && feat < 4.0 * span / n) n *= 2;

  const double hx = bx.width() / n, hy = by.width() / n;
  std::vector<char> in(static_cast<std::size_t>(n) * n, 0);
  auto strictly_inside = [&](Point p) {
    for (const auto& c : constraints_)
      if (c.eval(p) <= 0) return false;
    return true;
  };
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      Point p{bx.lo + (ix + 0.5) * hx, by.lo + (iy + 0.5) * hy};
      in[static_cast<std::size_t>(iy) * n + ix] = strictly_inside(p) ? 1 : 0;
    }
  int sx = std::clamp(static_cast<int>((seed_.x - bx.lo) / hx), 0, n - 1);
  int sy = std::clamp(static_cast<int>((seed_.y - by.lo) / hy), 0, n - 1);
  std::vector<char> vis(in.size(), 0);
  std::deque<std::pair<int, int>> q;
  q.push_back({sx, sy});
  vis[static_cast<std::size_t>(sy) * n + sx] = 1;
  while (!q.empty()) {
    auto [cx, cy] = q.front();
    q.pop_front();
    const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      int nx2 = cx + dx[d], ny2 = cy + dy[d];
      if (nx2 < 0 || ny2 < 0 || nx2 >= n || ny2 >= n) continue;
      std::size_t idx = static_cast<std::size_t>(ny2) * n + nx2;
      if (vis[idx] || !in[idx]) continue;
      vis[idx] = 1;
      q.push_back({nx2, ny2});
    }
  }
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i] && !vis[i]) {
      rep.issues.push_back("cell disconnected: sign-vector cell has a component away from the seed");
      break;
    }
  return rep;
}

}  // namespace reebcirc
