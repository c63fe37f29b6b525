#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebcirc/geom.hpp"
#include "reebcirc/interval.hpp"

namespace reebcirc {

enum class Side { KeepInside, KeepOutside };

/// One sign constraint f_j. f = r^2 - |p-c|^2 for KeepInside and its negation
/// for KeepOutside, so the admissible side is always f > 0.
struct HalfConstraint {
  Circle circle;
  Side side = Side::KeepInside;

  double eval(Point p) const {
    double v = circle.eval_inside(p);
    return side == Side::KeepInside ? v : -v;
  }
};

enum class PointClass { Interior, Boundary, Exterior };

enum class SingularKind { DoublePoint, Tangency };

struct SingularPoint {
  Point location;
  SingularKind kind = SingularKind::Tangency;
  int c0 = -1;               // constraint index
  int c1 = -1;               // second constraint for double points, else -1
  Axis axis = Axis::Horizontal;  // meaningful for tangencies

  bool same_as(const SingularPoint& o, double tol) const {
    return kind == o.kind && c0 == o.c0 && c1 == o.c1 && dist(location, o.location) <= tol;
  }
};

struct ValidityReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

/// A region surrounded by circles, restricted to the sign-vector cell
/// {f_j > 0 for all j} that contains the seed point. Immutable; all queries
/// are pure and safe to call concurrently.
class SSRegion {
 public:
  SSRegion(std::vector<HalfConstraint> constraints, Point seed, Tolerance tol = {});

  const std::vector<HalfConstraint>& constraints() const { return constraints_; }
  Point seed() const { return seed_; }
  const Tolerance& tol() const { return tol_; }
  int size() const { return static_cast<int>(constraints_.size()); }

  SSRegion with_constraint(HalfConstraint hc) const;

  PointClass classify(Point p) const;

  /// Fiber over sweep coordinate u: the transverse slice of the closure as a
  /// disjoint union of closed intervals. u should stay away from critical
  /// abscissae; the sweep in reeb.cpp guarantees that for its own queries.
  IntervalSet fiber(double u, Axis axis) const;

  std::vector<SingularPoint> singular_points(Axis axis) const;

  ValidityReport validate() const;
  /// Genericity and seed checks only; skips the grid connectivity test.
  ValidityReport validate_fast() const;

  /// Maximal angular intervals of circle j whose points lie on the region
  /// boundary. Full circle comes back as the single interval [0, 2pi).
  std::vector<std::pair<double, double>> boundary_arcs(int j) const;

  /// Projection bounds of the cell (from KeepInside boxes).
  Interval bounds(Axis axis) const;

  /// Smallest geometric feature: min over circle radii and pairwise distances
  /// of boundary-relevant special points. Drives grid refinement and the
  /// raster-oracle resolution exclusion rule.
  double min_feature_size() const;

 private:
  void genericity_checks(ValidityReport& rep) const;
  bool boundary_arcs_nonempty_(int j) const;
  std::vector<HalfConstraint> constraints_;
  Point seed_;
  Tolerance tol_;
};

}  // namespace reebcirc
