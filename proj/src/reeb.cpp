#include "reebcirc/reeb.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace reebcirc {

int PRGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.v0 == v) + (e.v1 == v);
  return d;
}

std::vector<int> PRGraph::incident_edges(int v) const {
  std::vector<int> out;
  for (const auto& e : edges)
    if (e.v0 == v || e.v1 == v) out.push_back(e.id);
  return out;
}

Tree PRGraph::to_tree() const {
  Tree t;
  t.n = static_cast<int>(vertices.size());
  for (const auto& e : edges) t.edges.push_back({e.v0, e.v1});
  return t;
}

bool PRGraph::connected() const {
  if (vertices.empty()) return false;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.v0].push_back(e.v1);
    adj[e.v1].push_back(e.v0);
  }
  std::vector<char> vis(vertices.size(), 0);
  std::vector<int> st{0};
  vis[0] = 1;
  std::size_t seen = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++seen;
        st.push_back(w);
      }
  }
  return seen == vertices.size();
}

bool is_tree(const PRGraph& g) {
  return g.connected() && g.edges.size() + 1 == g.vertices.size();
}

std::string canonical_code_of(const PRGraph& g, bool with_kinds) {
  Tree t = g.to_tree();
  if (!with_kinds) return canonical_code(t);
  std::vector<std::string> labels(g.vertices.size());
  for (const auto& v : g.vertices) labels[v.id] = to_string(v.kind);
  return canonical_code(t, &labels);
}

namespace {

// How far the boundary branches through a singular point move over a sweep
// offset of delta, computed exactly from the involved circles.
double movement_bound(const SSRegion& r, const SingularPoint& s, Axis axis, double u_probe,
                      double delta) {
  double worst = 0.0;
  double ts = transverse_coord(axis, s.location);
  for (int ci : {s.c0, s.c1}) {
    if (ci < 0) continue;
    const Circle& c = r.constraints()[ci].circle;
    double du = u_probe - center_sweep(axis, c);
    double disc = c.radius * c.radius - du * du;
    double dt = std::abs(ts - center_transverse(axis, c));
    double m;
    if (disc >= 0.0)
      m = std::abs(std::sqrt(disc) - dt);
    else
      m = dt + std::sqrt(2.0 * c.radius * delta);  // branch absent on this side
    worst = std::max(worst, m);
  }
  return worst;
}

struct VertexBuild {
  std::vector<int> sing_ids;       // indices into the critical's singular list
  std::vector<int> left, right;    // attached near-fiber interval indices
};

}  // namespace

PRGraph compute_pr_graph(const SSRegion& r, Axis axis) {
  const double eps = r.tol().eps_abs;
  auto sing = r.singular_points(axis);
  if (sing.empty()) throw InvalidRegion("compute_pr_graph: no singular points (empty region?)");

  std::sort(sing.begin(), sing.end(), [&](const SingularPoint& a, const SingularPoint& b) {
    return sweep_coord(axis, a.location) < sweep_coord(axis, b.location);
  });

  // Merge critical abscissae closer than 2 eps.
  std::vector<double> criticals;
  std::vector<std::vector<SingularPoint>> groups;
  for (const auto& s : sing) {
    double u = sweep_coord(axis, s.location);
    if (!criticals.empty() && u - sweep_coord(axis, groups.back().back().location) <= 2 * eps) {
      groups.back().push_back(s);
      continue;
    }
    criticals.push_back(u);
    groups.push_back({s});
  }
  for (std::size_t k = 0; k < groups.size(); ++k) {
    double acc = 0;
    for (const auto& s : groups[k]) acc += sweep_coord(axis, s.location);
    criticals[k] = acc / groups[k].size();
  }

  const int m = static_cast<int>(criticals.size());
  if (m < 2) throw GenericityViolation("compute_pr_graph: fewer than two critical abscissae");

  PRGraph g;
  g.axis = axis;
  g.criticals = criticals;

  // Slab fibers with the interval-count constancy check at 1/4, 1/2, 3/4.
  const int n_slabs = m - 1;
  g.slab_mid.resize(n_slabs);
  g.slab_fibers.resize(n_slabs);
  for (int k = 0; k < n_slabs; ++k) {
    double lo = criticals[k], hi = criticals[k + 1], w = hi - lo;
    g.slab_mid[k] = lo + 0.5 * w;
    IntervalSet f_mid = r.fiber(g.slab_mid[k], axis);
    IntervalSet f_q1 = r.fiber(lo + 0.25 * w, axis);
    IntervalSet f_q3 = r.fiber(lo + 0.75 * w, axis);
    if (f_mid.size() != f_q1.size() || f_mid.size() != f_q3.size())
      throw GenericityViolation("compute_pr_graph: fiber count changes inside a slab (missed critical)");
    if (f_mid.empty())
      throw GenericityViolation("compute_pr_graph: empty fiber between criticals (region disconnected along sweep)");
    g.slab_fibers[k] = std::move(f_mid);
  }

  double span = criticals.back() - criticals.front();
  {
    IntervalSet before = r.fiber(criticals.front() - std::max(0.01 * span, 100 * eps), axis);
    IntervalSet after = r.fiber(criticals.back() + std::max(0.01 * span, 100 * eps), axis);
    if (!before.empty() || !after.empty())
      throw GenericityViolation("compute_pr_graph: region extends past its extreme singular points");
  }

  // Near-fibers and singular-point attachment at each critical.
  g.crit_delta.resize(m);
  std::vector<IntervalSet> NL(m), NR(m);
  std::vector<VertexBuild> builds(m);
  std::vector<std::vector<int>> att_left(m), att_right(m);  // union over the critical

  for (int k = 0; k < m; ++k) {
    double wl = k > 0 ? criticals[k] - criticals[k - 1] : std::numeric_limits<double>::infinity();
    double wr = k < m - 1 ? criticals[k + 1] - criticals[k] : std::numeric_limits<double>::infinity();
    double delta = std::max(8 * eps, 1e-4 * std::min(wl, wr));
    g.crit_delta[k] = delta;
    if (k > 0) {
      NL[k] = r.fiber(criticals[k] - delta, axis);
      if (NL[k].size() != g.slab_fibers[k - 1].size())
        throw GenericityViolation("compute_pr_graph: fiber count changes approaching a critical");
    }
    if (k < m - 1) {
      NR[k] = r.fiber(criticals[k] + delta, axis);
      if (NR[k].size() != g.slab_fibers[k].size())
        throw GenericityViolation("compute_pr_graph: fiber count changes leaving a critical");
    }

    const auto& grp = groups[k];
    const int ns = static_cast<int>(grp.size());
    std::vector<std::vector<int>> attL(ns), attR(ns);
    for (int s = 0; s < ns; ++s) {
      double ts = transverse_coord(axis, grp[s].location);
      double bl = 2.0 * movement_bound(r, grp[s], axis, criticals[k] - delta, delta) + 1e3 * eps;
      double br = 2.0 * movement_bound(r, grp[s], axis, criticals[k] + delta, delta) + 1e3 * eps;
      for (std::size_t i = 0; i < NL[k].size(); ++i)
        if (NL[k][i].distance(ts) <= bl) attL[s].push_back(static_cast<int>(i));
      for (std::size_t i = 0; i < NR[k].size(); ++i)
        if (NR[k][i].distance(ts) <= br) attR[s].push_back(static_cast<int>(i));
      if (attL[s].empty() && attR[s].empty())
        throw GenericityViolation("compute_pr_graph: singular point attaches to no fiber interval");
    }

    // All singular points at one (merged) critical must share one fiber
    // component; link through common attached intervals.
    std::vector<int> comp(ns);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int a = 0; a < ns; ++a)
      for (int b = a + 1; b < ns; ++b) {
        auto meets = [](const std::vector<int>& x, const std::vector<int>& y) {
          for (int i : x)
            for (int j : y)
              if (i == j) return true;
          return false;
        };
        if (meets(attL[a], attL[b]) || meets(attR[a], attR[b])) comp[find(a)] = find(b);
      }
    int root = find(0);
    for (int s = 1; s < ns; ++s)
      if (find(s) != root)
        throw GenericityViolation(
            "compute_pr_graph: merged critical abscissa mixes distinct fiber components");

    VertexBuild vb;
    for (int s = 0; s < ns; ++s) vb.sing_ids.push_back(s);
    std::vector<char> inL(NL[k].size(), 0), inR(NR[k].size(), 0);
    for (int s = 0; s < ns; ++s) {
      for (int i : attL[s]) inL[i] = 1;
      for (int i : attR[s]) inR[i] = 1;
    }
    for (std::size_t i = 0; i < inL.size(); ++i)
      if (inL[i]) vb.left.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < inR.size(); ++i)
      if (inR[i]) vb.right.push_back(static_cast<int>(i));
    builds[k] = std::move(vb);
  }

  // Create vertices.
  g.crit_vertices.assign(m, {});
  for (int k = 0; k < m; ++k) {
    PRVertex v;
    v.id = static_cast<int>(g.vertices.size());
    v.u = criticals[k];
    v.singulars = groups[k];
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& s : groups[k]) {
      double t = transverse_coord(axis, s.location);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    for (int i : builds[k].left) {
      lo = std::min(lo, NL[k][i].lo);
      hi = std::max(hi, NL[k][i].hi);
    }
    for (int i : builds[k].right) {
      lo = std::min(lo, NR[k][i].lo);
      hi = std::max(hi, NR[k][i].hi);
    }
    v.span = {lo, hi};
    g.crit_vertices[k].push_back(v.id);
    g.vertices.push_back(std::move(v));
  }

  // Passthrough pairing and chain construction.
  // seg id = (slab k, interval i). left_end/right_end: vertex terminating the
  // segment run on that side, or -1 when the run continues across a critical.
  g.seg_edge.resize(n_slabs);
  for (int k = 0; k < n_slabs; ++k) g.seg_edge[k].assign(g.slab_fibers[k].size(), -1);

  // For each critical: map NL index -> terminating vertex or paired NR index.
  struct Crossing {
    std::vector<int> left_vertex;   // per left-slab interval: vertex id or -1
    std::vector<int> right_vertex;  // per right-slab interval: vertex id or -1
    std::vector<int> pass_map;      // left interval -> right interval (or -1)
  };
  std::vector<Crossing> crossings(m);
  for (int k = 0; k < m; ++k) {
    Crossing cr;
    cr.left_vertex.assign(NL[k].size(), -1);
    cr.right_vertex.assign(NR[k].size(), -1);
    cr.pass_map.assign(NL[k].size(), -1);
    int vid = g.crit_vertices[k][0];
    for (int i : builds[k].left) cr.left_vertex[i] = vid;
    for (int i : builds[k].right) cr.right_vertex[i] = vid;
    std::vector<int> freeL, freeR;
    for (std::size_t i = 0; i < NL[k].size(); ++i)
      if (cr.left_vertex[i] < 0) freeL.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < NR[k].size(); ++i)
      if (cr.right_vertex[i] < 0) freeR.push_back(static_cast<int>(i));
    if (freeL.size() != freeR.size())
      throw GenericityViolation("compute_pr_graph: passthrough interval counts differ across a critical");
    for (std::size_t i = 0; i < freeL.size(); ++i) {
      // Order-preserving pairing; verify the intervals stay close.
      if (!NL[k][freeL[i]].overlaps(NR[k][freeR[i]], 0.05 * std::max(1.0, span)))
        throw GenericityViolation("compute_pr_graph: passthrough intervals drift apart at a critical");
      cr.pass_map[freeL[i]] = freeR[i];
    }
    crossings[k] = std::move(cr);
  }

  // Walk chains left to right.
  std::vector<std::vector<char>> used(n_slabs);
  for (int k = 0; k < n_slabs; ++k) used[k].assign(g.slab_fibers[k].size(), 0);
  for (int k0 = 0; k0 < n_slabs; ++k0) {
    for (std::size_t i0 = 0; i0 < g.slab_fibers[k0].size(); ++i0) {
      if (used[k0][i0]) continue;
      // Only start chains at a vertex-terminated left end.
      int vleft = crossings[k0].right_vertex[i0];
      if (vleft < 0) continue;
      PREdge e;
      e.id = static_cast<int>(g.edges.size());
      e.v0 = vleft;
      int k = k0;
      int idx = static_cast<int>(i0);
      while (true) {
        used[k][idx] = 1;
        e.chain.push_back({k, idx});
        int vright = crossings[k + 1].left_vertex[idx];
        if (vright >= 0) {
          e.v1 = vright;
          break;
        }
        int nxt = crossings[k + 1].pass_map[idx];
        if (nxt < 0 || k + 1 >= n_slabs)
          throw GenericityViolation("compute_pr_graph: fiber chain escapes the sweep range");
        k = k + 1;
        idx = nxt;
      }
      e.slab = {criticals[e.chain.front().first], criticals[e.chain.back().first + 1]};
      auto [mk, mi] = e.chain[e.chain.size() / 2];
      e.sample = g.slab_fibers[mk][mi];
      for (auto [sk, si] : e.chain) g.seg_edge[sk][si] = e.id;
      g.edges.push_back(std::move(e));
    }
  }
  for (int k = 0; k < n_slabs; ++k)
    for (std::size_t i = 0; i < g.slab_fibers[k].size(); ++i)
      if (!used[k][i])
        throw GenericityViolation("compute_pr_graph: fiber interval not reachable from any vertex");

  for (auto& v : g.vertices) {
    int d = g.degree(v.id);
    v.kind = d == 1 ? VertexKind::Leaf : (d == 2 ? VertexKind::Pass : VertexKind::Junction);
    if (d == 0)
      throw GenericityViolation("compute_pr_graph: isolated vertex");
  }
  if (!g.connected())
    throw GenericityViolation("compute_pr_graph: graph disconnected (region has several components)");
  return g;
}

LocateResult locate(const SSRegion& r, const PRGraph& g, Point p) {
  if (r.classify(p) == PointClass::Exterior)
    throw PointOutsideRegion("locate: point is outside the region closure");
  const double u = sweep_coord(g.axis, p);
  const double t = transverse_coord(g.axis, p);
  const int m = static_cast<int>(g.criticals.size());

  int at_crit = -1;
  for (int k = 0; k < m; ++k)
    if (std::abs(u - g.criticals[k]) <= std::max(g.crit_delta[k], 10 * r.tol().eps_abs)) {
      at_crit = k;
      break;
    }
  if (at_crit >= 0) {
    for (int vid : g.crit_vertices[at_crit]) {
      const auto& v = g.vertices[vid];
      double slack = 1e-9 + 1e-6 * std::max(1.0, v.span.width());
      if (v.span.contains(t, slack)) return {true, vid, false};
    }
    // Passing an unrelated critical inside an edge: probe into the wider slab.
    int k = at_crit;
    bool go_right;
    if (k == 0)
      go_right = true;
    else if (k == m - 1)
      go_right = false;
    else
      go_right = g.criticals[k + 1] - g.criticals[k] > g.criticals[k] - g.criticals[k - 1];
    double up = g.criticals[k] + (go_right ? g.crit_delta[k] : -g.crit_delta[k]);
    IntervalSet f = r.fiber(up, g.axis);
    int idx = f.find(t, 1e-4);
    if (idx < 0) throw PointOutsideRegion("locate: no fiber interval near the point");
    int slab = go_right ? k : k - 1;
    return {false, g.seg_edge[slab][idx], true};
  }

  int slab = -1;
  for (int k = 0; k + 1 < m; ++k)
    if (u > g.criticals[k] && u < g.criticals[k + 1]) {
      slab = k;
      break;
    }
  if (slab < 0) throw PointOutsideRegion("locate: sweep coordinate outside the region range");
  IntervalSet f = r.fiber(u, g.axis);
  int idx = f.find(t, 10 * r.tol().eps_abs);
  if (idx < 0) throw PointOutsideRegion("locate: no fiber interval contains the point");
  if (f.size() != g.slab_fibers[slab].size())
    throw GenericityViolation("locate: fiber structure differs from the sweep's slab fiber");
  return {false, g.seg_edge[slab][idx], true};
}

namespace {
Tree corollary1_candidate(const Tree& before, int edge_index, bool pendant_at_first) {
  Tree t = subdivide_edge(before, edge_index, 2);
  // subdivide_edge appends the two new vertices as n, n+1 (ordered from v0)
  int a = t.n - 2, b = t.n - 1;
  return attach_path(t, pendant_at_first ? a : b, 1);
}
}  // namespace

bool check_corollary1(const PRGraph& before, const PRGraph& after, int edge_id) {
  if (!is_tree(before) || !is_tree(after)) return false;
  if (edge_id < 0 || edge_id >= static_cast<int>(before.edges.size())) return false;
  Tree b = before.to_tree();
  std::string target = canonical_code_of(after);
  return canonical_code(corollary1_candidate(b, edge_id, true)) == target ||
         canonical_code(corollary1_candidate(b, edge_id, false)) == target;
}

bool check_corollary2(const PRGraph& before, const PRGraph& after, int edge_id) {
  if (!is_tree(before) || !is_tree(after)) return false;
  if (edge_id < 0 || edge_id >= static_cast<int>(before.edges.size())) return false;
  Tree b = before.to_tree();
  return canonical_code(subdivide_edge(b, edge_id, 2)) == canonical_code_of(after);
}

// ---- canonical edge addresses ----------------------------------------------

namespace {

struct Layout {
  int root = -1;
  // children[v] sorted deterministically; parent[v]; edge id to parent.
  std::vector<std::vector<int>> children;
  std::vector<int> parent, parent_edge;
};

Layout build_layout(const PRGraph& g) {
  Tree t = g.to_tree();
  if (!t.is_tree()) throw NotATree("edge_address: graph is not a tree");
  auto centers = tree_centers(t);
  int root = centers[0];
  if (centers.size() == 2) {
    std::string c0 = rooted_code(t, centers[0]);
    std::string c1 = rooted_code(t, centers[1]);
    if (c1 < c0)
      root = centers[1];
    else if (c0 == c1) {
      // isomorphic halves: break the tie geometrically
      const auto &v0 = g.vertices[centers[0]], &v1 = g.vertices[centers[1]];
      root = (v1.u < v0.u || (v1.u == v0.u && v1.span.lo < v0.span.lo)) ? centers[1] : centers[0];
    }
  }

  Layout lay;
  lay.root = root;
  lay.children.resize(t.n);
  lay.parent.assign(t.n, -1);
  lay.parent_edge.assign(t.n, -1);

  std::vector<std::vector<std::pair<int, int>>> adj(t.n);  // (neighbor, edge id)
  for (const auto& e : g.edges) {
    adj[e.v0].push_back({e.v1, e.id});
    adj[e.v1].push_back({e.v0, e.id});
  }
  // DFS assigning parents, then sort children by (subtree code, u, span.lo).
  std::vector<int> order{root};
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (auto [w, eid] : adj[v])
      if (w != lay.parent[v]) {
        lay.parent[w] = v;
        lay.parent_edge[w] = eid;
        lay.children[v].push_back(w);
        order.push_back(w);
      }
  }
  std::vector<std::string> sub(t.n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> kids;
    for (int w : lay.children[v]) kids.push_back(sub[w]);
    std::sort(kids.begin(), kids.end());
    sub[v] = "(";
    for (auto& k : kids) sub[v] += k;
    sub[v] += ")";
  }
  for (int v = 0; v < t.n; ++v)
    std::sort(lay.children[v].begin(), lay.children[v].end(), [&](int a, int b) {
      if (sub[a] != sub[b]) return sub[a] < sub[b];
      const auto &va = g.vertices[a], &vb = g.vertices[b];
      if (va.u != vb.u) return va.u < vb.u;
      if (va.span.lo != vb.span.lo) return va.span.lo < vb.span.lo;
      return a < b;
    });
  return lay;
}

}  // namespace

std::string edge_address(const PRGraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= static_cast<int>(g.edges.size()))
    throw Error("edge_address: edge id out of range");
  Layout lay = build_layout(g);
  int child = -1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (lay.parent_edge[v] == edge_id) child = static_cast<int>(v);
  if (child < 0) throw Error("edge_address: edge not in layout");
  std::vector<int> path;
  int v = child;
  while (lay.parent[v] >= 0) {
    int p = lay.parent[v];
    int idx = static_cast<int>(std::find(lay.children[p].begin(), lay.children[p].end(), v) -
                               lay.children[p].begin());
    path.push_back(idx);
    v = p;
  }
  std::reverse(path.begin(), path.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "/" : "") << path[i];
  return os.str();
}

int resolve_edge_address(const PRGraph& g, const std::string& address) {
  Layout lay = build_layout(g);
  int v = lay.root;
  std::istringstream is(address);
  std::string tok;
  while (std::getline(is, tok, '/')) {
    if (tok.empty()) throw Error("resolve_edge_address: malformed address '" + address + "'");
    int idx;
    try {
      idx = std::stoi(tok);
    } catch (...) {
      throw Error("resolve_edge_address: malformed address '" + address + "'");
    }
    if (idx < 0 || idx >= static_cast<int>(lay.children[v].size()))
      throw Error("resolve_edge_address: address '" + address + "' does not exist in this graph");
    v = lay.children[v][idx];
  }
  if (v == lay.root) throw Error("resolve_edge_address: empty address");
  return lay.parent_edge[v];
}

}  // namespace reebcirc
