#include "support/raster_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace reebcirc::testing {

namespace {

struct Run {
  int lo, hi;  // inclusive pixel rows
  bool overlaps(const Run& o) const { return lo <= o.hi && o.lo <= hi; }
};

struct Marker {
  int col;
  double t;
};

}  // namespace

double raster_cell_size(const SSRegion& r, Axis axis, int grid) {
  Interval bu = r.bounds(axis);
  Interval bt = r.bounds(axis == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal);
  return std::max(bu.width(), bt.width()) / grid;
}

OracleGraph raster_reeb_graph(const SSRegion& r, Axis axis, int grid) {
  Interval bu = r.bounds(axis);
  Interval bt = r.bounds(axis == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal);
  const double cell = std::max(bu.width(), bt.width()) / grid;
  const double pad = 3 * cell;
  const double u0 = bu.lo - pad;
  const double t0 = bt.lo - pad, t1 = bt.hi + pad;
  const int nu = static_cast<int>(std::ceil((bu.hi + pad - u0) / cell));
  const int nt = static_cast<int>(std::ceil((t1 - t0) / cell));

  auto in_closure = [&](double u, double t) {
    Point p = make_point(axis, u, t);
    for (const auto& c : r.constraints())
      if (c.eval(p) < 0) return false;
    return true;
  };

  auto column_runs = [&](int col) {
    double u = u0 + (col + 0.5) * cell;
    std::vector<Run> runs;
    bool inside = false;
    int start = 0;
    for (int row = 0; row < nt; ++row) {
      double t = t0 + (row + 0.5) * cell;
      bool v = in_closure(u, t);
      if (v && !inside) {
        inside = true;
        start = row;
      } else if (!v && inside) {
        inside = false;
        runs.push_back({start, row - 1});
      }
    }
    if (inside) runs.push_back({start, nt - 1});
    return runs;
  };

  // Marker points from elementary geometry: pairwise intersections and axis
  // extremes sitting on the closure. Only markers whose local run pattern is
  // 1:1 (no event) are kept; they become the degree-2 vertices. Event markers
  // coincide with a tracked run-count change and need no extra node.
  std::vector<Marker> markers;
  {
    const auto& cons = r.constraints();
    std::vector<Point> candidates;
    for (std::size_t i = 0; i < cons.size(); ++i)
      for (std::size_t j = i + 1; j < cons.size(); ++j) {
        auto inter = circle_circle_intersections(cons[i].circle, cons[j].circle, r.tol());
        for (Point p : inter.points) candidates.push_back(p);
      }
    const int K = 3;
    for (Point p : candidates) {
      bool on_closure = true;
      for (const auto& c : cons) on_closure &= c.eval(p) >= -r.tol().eps_abs;
      if (!on_closure) continue;
      double mu = sweep_coord(axis, p), mt = transverse_coord(axis, p);
      int col = std::clamp(static_cast<int>((mu - u0) / cell), 0, nu - 1);

      // A marker is a pass vertex iff its own run chain stays 1:1 for K
      // columns in both directions; any run-count event that close belongs to
      // the same singular fiber and already produces a node.
      auto runs_here = column_runs(col);
      int i0 = -1;
      for (std::size_t i = 0; i < runs_here.size(); ++i) {
        double lo = t0 + runs_here[i].lo * cell - 2 * cell;
        double hi = t0 + (runs_here[i].hi + 1) * cell + 2 * cell;
        if (mt >= lo && mt <= hi) i0 = static_cast<int>(i);
      }
      if (i0 < 0) continue;
      auto clean_chain = [&](int dir) {
        Run cur = runs_here[i0];
        for (int step = 1; step <= K; ++step) {
          int c = col + dir * step;
          if (c < 0 || c >= nu) return false;
          auto runs_c = column_runs(c);
          int hits = 0;
          Run nxt{};
          for (const Run& rn : runs_c)
            if (rn.overlaps(cur)) {
              ++hits;
              nxt = rn;
            }
          if (hits != 1) return false;
          // reverse direction must also be 1:1 (no merge hiding behind us)
          int back = 0;
          for (const Run& rn : column_runs(c - dir))
            if (rn.overlaps(nxt)) ++back;
          if (back != 1) return false;
          cur = nxt;
        }
        return true;
      };
      if (clean_chain(+1) && clean_chain(-1)) markers.push_back({col, mt});
    }
    std::sort(markers.begin(), markers.end(),
              [](const Marker& a, const Marker& b) { return a.col < b.col; });
  }

  struct Track {
    int start_node;
    Run run;
  };
  std::vector<std::pair<int, int>> edges;
  int n_nodes = 0;
  std::vector<Track> active;
  std::size_t marker_pos = 0;

  for (int col = 0; col < nu; ++col) {
    std::vector<Run> runs = column_runs(col);

    const int np = static_cast<int>(active.size());
    const int nc = static_cast<int>(runs.size());
    std::vector<int> comp_p(np, -1), comp_c(nc, -1);
    int n_comp = 0;
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nc; ++j)
        if (active[i].run.overlaps(runs[j])) {
          int cp = comp_p[i], cc = comp_c[j];
          if (cp < 0 && cc < 0) {
            comp_p[i] = comp_c[j] = n_comp++;
          } else if (cp < 0) {
            comp_p[i] = cc;
          } else if (cc < 0) {
            comp_c[j] = cp;
          } else if (cp != cc) {
            for (int& x : comp_p)
              if (x == cc) x = cp;
            for (int& x : comp_c)
              if (x == cc) x = cp;
          }
        }

    std::vector<std::pair<double, bool>> col_markers;  // (t, consumed)
    while (marker_pos < markers.size() && markers[marker_pos].col == col) {
      col_markers.push_back({markers[marker_pos].t, false});
      ++marker_pos;
    }
    auto in_run = [&](const Run& run, double t) {
      double lo = t0 + run.lo * cell - 2 * cell, hi = t0 + (run.hi + 1) * cell + 2 * cell;
      return t >= lo && t <= hi;
    };

    std::vector<Track> next;
    for (int comp = 0; comp < n_comp; ++comp) {
      std::vector<int> ps, cs;
      for (int i = 0; i < np; ++i)
        if (comp_p[i] == comp) ps.push_back(i);
      for (int j = 0; j < nc; ++j)
        if (comp_c[j] == comp) cs.push_back(j);
      if (ps.empty() && cs.empty()) continue;

      bool has_marker = false;
      for (auto& [mt, used] : col_markers) {
        if (used) continue;
        bool hit = false;
        for (int j : cs) hit |= in_run(runs[j], mt);
        if (hit) {
          has_marker = true;
          used = true;
        }
      }

      if (ps.size() == 1 && cs.size() == 1 && !has_marker) {
        Track t = active[ps[0]];
        t.run = runs[cs[0]];
        next.push_back(t);
        continue;
      }
      int v = n_nodes++;
      for (int i : ps) edges.push_back({active[i].start_node, v});
      for (int j : cs) next.push_back({v, runs[j]});
    }
    for (int j = 0; j < nc; ++j)
      if (comp_c[j] < 0) next.push_back({n_nodes++, runs[j]});
    for (int i = 0; i < np; ++i)
      if (comp_p[i] < 0) {
        int v = n_nodes++;
        edges.push_back({active[i].start_node, v});
      }
    active = std::move(next);
  }
  for (const auto& t : active) {
    int v = n_nodes++;
    edges.push_back({t.start_node, v});
  }

  OracleGraph out;
  out.tree.n = n_nodes;
  out.tree.edges = edges;
  std::vector<int> deg(n_nodes, 0);
  for (auto [a, b] : edges) {
    deg[a]++;
    deg[b]++;
  }
  out.kind_labels.resize(n_nodes);
  for (int v = 0; v < n_nodes; ++v)
    out.kind_labels[v] = deg[v] == 1 ? "leaf" : (deg[v] == 2 ? "pass" : "junction");
  return out;
}

}  // namespace reebcirc::testing
