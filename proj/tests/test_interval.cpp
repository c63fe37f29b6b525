#include <doctest.h>

#include <random>

#include "reebcirc/interval.hpp"

using namespace reebcirc;

TEST_CASE("interval set clip and subtract") {
  IntervalSet s(Interval{-1, 1});
  s.subtract_open(0.5, 1.5);
  REQUIRE(s.size() == 1);
  CHECK(s[0].lo == -1.0);
  CHECK(s[0].hi == 0.5);

  IntervalSet t(Interval{-1, 1});
  t.subtract_open(-0.2, 0.2);
  REQUIRE(t.size() == 2);
  CHECK(t[0].hi == -0.2);
  CHECK(t[1].lo == 0.2);

  t.clip(-0.5, 0.5);
  REQUIRE(t.size() == 2);
  CHECK(t[0].lo == -0.5);
  CHECK(t[1].hi == 0.5);

  t.clip(2, 3);
  CHECK(t.empty());
}

TEST_CASE("interval set matches a brute-force membership oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    IntervalSet s(Interval{-2, 2});
    struct OpRec {
      bool clip;
      double lo, hi;
    };
    std::vector<OpRec> ops;
    int n_ops = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n_ops; ++i) {
      double a = coord(rng), b = coord(rng);
      if (a > b) std::swap(a, b);
      bool clip = rng() % 2;
      ops.push_back({clip, a, b});
      if (clip)
        s.clip(a, b);
      else
        s.subtract_open(a, b);
    }
    auto member = [&](double t) {
      if (t < -2 || t > 2) return false;
      for (auto& o : ops) {
        if (o.clip && (t < o.lo || t > o.hi)) return false;
        if (!o.clip && t > o.lo && t < o.hi) return false;
      }
      return true;
    };
    for (int probe = 0; probe < 100; ++probe) {
      double t = coord(rng);
      bool in_set = s.find(t) >= 0;
      CHECK(in_set == member(t));
    }
    // sortedness and disjointness
    for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i].hi < s[i + 1].lo);
  }
}
