#pragma once

#include <string>
#include <vector>

#include "reebcirc/region.hpp"
#include "reebcirc/tree.hpp"

namespace reebcirc {

enum class VertexKind { Leaf, Pass, Junction };

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Leaf: return "leaf";
    case VertexKind::Pass: return "pass";
    default: return "junction";
  }
}

struct PRVertex {
  int id = -1;
  double u = 0.0;       // sweep coordinate of the singular fiber
  Interval span{0, 0};  // transverse extent of the fiber component
  VertexKind kind = VertexKind::Leaf;
  std::vector<SingularPoint> singulars;
};

struct PREdge {
  int id = -1;
  int v0 = -1, v1 = -1;  // v0 at the smaller sweep coordinate
  Interval slab{0, 0};   // open sweep interval spanned by the edge
  Interval sample{0, 0}; // fiber interval at the middle slab midpoint
  std::vector<std::pair<int, int>> chain;  // (slab index, interval index) run
};

/// Poincaré-Reeb graph of a region for one sweep axis. Vertices are the fiber
/// components containing singular points; everything regular is folded into
/// edges, so degree-2 vertices are legitimate (they carry double points).
struct PRGraph {
  Axis axis = Axis::Horizontal;
  std::vector<PRVertex> vertices;
  std::vector<PREdge> edges;
  std::vector<double> criticals;

  // sweep bookkeeping, used by locate() and the ops module
  std::vector<double> slab_mid;
  std::vector<IntervalSet> slab_fibers;
  std::vector<std::vector<int>> seg_edge;   // [slab][interval] -> edge id
  std::vector<std::vector<int>> crit_vertices;
  std::vector<double> crit_delta;

  int degree(int v) const;
  std::vector<int> incident_edges(int v) const;
  Tree to_tree() const;
  bool connected() const;
};

PRGraph compute_pr_graph(const SSRegion& r, Axis axis);

bool is_tree(const PRGraph& g);

/// AHU code of the graph viewed as an abstract tree (NotATree otherwise).
/// with_kinds adds the vertex kind as a label.
std::string canonical_code_of(const PRGraph& g, bool with_kinds = false);

struct LocateResult {
  bool is_vertex = false;
  int id = -1;        // vertex id or edge id
  bool interior = false;  // true iff p maps into an open edge
};

LocateResult locate(const SSRegion& r, const PRGraph& g, Point p);

/// Corollary 1 shape test: `after` equals `before` with edge e subdivided by
/// two vertices and a pendant edge attached to one of them.
bool check_corollary1(const PRGraph& before, const PRGraph& after, int edge_id);
/// Corollary 2 shape test: `after` equals `before` with e subdivided twice.
bool check_corollary2(const PRGraph& before, const PRGraph& after, int edge_id);

/// Canonical edge address: path of child indices in the center-rooted
/// deterministic layout, e.g. "1/0/2". Stable across runs for identical
/// geometry, robust to internal id changes.
std::string edge_address(const PRGraph& g, int edge_id);
int resolve_edge_address(const PRGraph& g, const std::string& address);

}  // namespace reebcirc
