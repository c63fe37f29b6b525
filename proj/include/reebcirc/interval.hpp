#pragma once

#include <algorithm>
#include <vector>

namespace reebcirc {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double t, double slack = 0.0) const { return t >= lo - slack && t <= hi + slack; }
  bool overlaps(const Interval& o, double slack = 0.0) const {
    return lo <= o.hi + slack && o.lo <= hi + slack;
  }
  /// Distance from t to the closed interval (0 when inside).
  double distance(double t) const { return std::max({lo - t, t - hi, 0.0}); }
};

/// Sorted union of pairwise disjoint closed intervals on one line.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval all) { iv_.push_back(all); }

  bool empty() const { return iv_.empty(); }
  std::size_t size() const { return iv_.size(); }
  const std::vector<Interval>& intervals() const { return iv_; }
  const Interval& operator[](std::size_t i) const { return iv_[i]; }

  /// Intersect with the closed band [lo, hi].
  void clip(double lo, double hi) {
    std::vector<Interval> out;
    out.reserve(iv_.size());
    for (const Interval& s : iv_) {
      double a = std::max(s.lo, lo), b = std::min(s.hi, hi);
      if (a <= b) out.push_back({a, b});
    }
    iv_ = std::move(out);
  }

  /// Remove the open band (lo, hi); touching endpoints stay.
  void subtract_open(double lo, double hi) {
    if (!(lo < hi)) return;
    std::vector<Interval> out;
    out.reserve(iv_.size() + 1);
    for (const Interval& s : iv_) {
      if (s.hi <= lo || s.lo >= hi) {
        out.push_back(s);
        continue;
      }
      if (s.lo <= lo) out.push_back({s.lo, lo});
      if (s.hi >= hi) out.push_back({hi, s.hi});
    }
    iv_ = std::move(out);
  }

  /// Index of the interval containing t (with slack), or -1.
  int find(double t, double slack = 0.0) const {
    for (std::size_t i = 0; i < iv_.size(); ++i)
      if (iv_[i].contains(t, slack)) return static_cast<int>(i);
    return -1;
  }

 private:
  std::vector<Interval> iv_;
};

}  // namespace reebcirc
