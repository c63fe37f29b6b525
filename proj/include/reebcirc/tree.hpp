#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reebcirc/errors.hpp"

namespace reebcirc {

/// Undirected simple graph intended to be a tree; connectivity/acyclicity is
/// checked where required rather than on construction.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
  int degree(int v) const;
  bool is_tree() const;  // connected and |E| = |V| - 1

  static Tree single_edge() { return Tree{2, {{0, 1}}}; }
  static Tree path(int vertices);
  /// Star K_{1,k}: vertex 0 in the middle.
  static Tree star(int legs);
};

/// AHU encoding rooted at the tree center; for bicentral trees both centers
/// are tried and the lexicographic minimum taken. Equal codes iff isomorphic.
/// Optional labels participate in the encoding.
std::string canonical_code(const Tree& t, const std::vector<std::string>* labels = nullptr);

std::string rooted_code(const Tree& t, int root, const std::vector<std::string>* labels = nullptr);

/// Tree centers (1 or 2 vertices) by iterative leaf pruning.
std::vector<int> tree_centers(const Tree& t);

bool isomorphic(const Tree& a, const Tree& b);

/// Subdivide edge (index into t.edges) by k new vertices; returns new tree.
Tree subdivide_edge(const Tree& t, int edge_index, int k);
/// Attach a fresh pendant path of `len` edges at vertex v.
Tree attach_path(const Tree& t, int v, int len);

/// All unlabeled trees with up to max_vertices vertices, one representative
/// per isomorphism class (grown by leaf additions, deduplicated by code).
std::vector<Tree> all_trees_up_to(int max_vertices);

}  // namespace reebcirc
