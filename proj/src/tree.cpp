#include "reebcirc/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reebcirc {

std::vector<std::vector<int>> Tree::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

int Tree::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

bool Tree::is_tree() const {
  if (n == 0 || static_cast<int>(edges.size()) != n - 1) return false;
  auto adj = adjacency();
  std::vector<char> vis(n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int seen = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++seen;
        stack.push_back(w);
      }
  }
  return seen == n;
}

Tree Tree::path(int vertices) {
  Tree t;
  t.n = vertices;
  for (int i = 0; i + 1 < vertices; ++i) t.edges.push_back({i, i + 1});
  return t;
}

Tree Tree::star(int legs) {
  Tree t;
  t.n = legs + 1;
  for (int i = 1; i <= legs; ++i) t.edges.push_back({0, i});
  return t;
}

std::vector<int> tree_centers(const Tree& t) {
  if (t.n == 1) return {0};
  auto adj = t.adjacency();
  std::vector<int> deg(t.n);
  std::vector<int> layer;
  for (int v = 0; v < t.n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = t.n;
  std::vector<char> removed(t.n, 0);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < t.n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

namespace {
std::string encode(int v, int parent, const std::vector<std::vector<int>>& adj,
                   const std::vector<std::string>* labels) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(encode(w, v, adj, labels));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  if (labels) s += (*labels)[v] + "|";
  for (auto& k : kids) s += k;
  s += ")";
  return s;
}
}  // namespace

std::string rooted_code(const Tree& t, int root, const std::vector<std::string>* labels) {
  auto adj = t.adjacency();
  return encode(root, -1, adj, labels);
}

std::string canonical_code(const Tree& t, const std::vector<std::string>* labels) {
  if (!t.is_tree()) throw NotATree("canonical_code: input graph is not a tree");
  auto centers = tree_centers(t);
  std::string best;
  for (int c : centers) {
    std::string code = rooted_code(t, c, labels);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

bool isomorphic(const Tree& a, const Tree& b) { return canonical_code(a) == canonical_code(b); }

Tree subdivide_edge(const Tree& t, int edge_index, int k) {
  if (edge_index < 0 || edge_index >= static_cast<int>(t.edges.size()))
    throw Error("subdivide_edge: bad edge index");
  Tree out = t;
  if (k <= 0) return out;
  auto [a, b] = out.edges[edge_index];
  out.edges.erase(out.edges.begin() + edge_index);
  int prev = a;
  for (int i = 0; i < k; ++i) {
    int v = out.n++;
    out.edges.push_back({prev, v});
    prev = v;
  }
  out.edges.push_back({prev, b});
  return out;
}

Tree attach_path(const Tree& t, int v, int len) {
  Tree out = t;
  int prev = v;
  for (int i = 0; i < len; ++i) {
    int w = out.n++;
    out.edges.push_back({prev, w});
    prev = w;
  }
  return out;
}

std::vector<Tree> all_trees_up_to(int max_vertices) {
  std::vector<Tree> out;
  if (max_vertices < 1) return out;
  std::vector<Tree> frontier{Tree{1, {}}};
  out.push_back(frontier[0]);
  for (int n = 2; n <= max_vertices; ++n) {
    std::map<std::string, Tree> next;
    for (const Tree& t : frontier)
      for (int v = 0; v < t.n; ++v) {
        Tree grown = attach_path(t, v, 1);
        next.emplace(canonical_code(grown), grown);
      }
    frontier.clear();
    for (auto& [code, t] : next) {
      frontier.push_back(t);
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace reebcirc
