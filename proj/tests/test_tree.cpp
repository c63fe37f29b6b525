#include <doctest.h>

#include <random>

#include "reebcirc/tree.hpp"

using namespace reebcirc;

TEST_CASE("canonical codes identify isomorphic trees") {
  CHECK(canonical_code(Tree::single_edge()) == canonical_code(Tree{2, {{1, 0}}}));
  // path of 3 and K_{1,2} are the same tree
  CHECK(canonical_code(Tree::path(3)) == canonical_code(Tree::star(2)));
  // K_{1,3} differs from the path of 4
  CHECK(canonical_code(Tree::star(3)) != canonical_code(Tree::path(4)));
}

TEST_CASE("canonical code equality matches explicit isomorphism search") {
  // backtracking isomorphism checker, independent of the AHU encoding
  auto brute_iso = [](const Tree& a, const Tree& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; ++i) perm[i] = i;
    auto adj_set = [](const Tree& t) {
      std::vector<std::vector<char>> m(t.n, std::vector<char>(t.n, 0));
      for (auto [u, v] : t.edges) m[u][v] = m[v][u] = 1;
      return m;
    };
    auto ma = adj_set(a), mb = adj_set(b);
    std::sort(perm.begin(), perm.end());
    do {
      bool ok = true;
      for (auto [u, v] : a.edges)
        if (!mb[perm[u]][perm[v]]) {
          ok = false;
          break;
        }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)ma;
    return false;
  };

  std::mt19937_64 rng(3);
  auto random_tree = [&](int n) {
    Tree t{1, {}};
    for (int v = 1; v < n; ++v) {
      int parent = static_cast<int>(rng() % t.n);
      t.edges.push_back({parent, t.n});
      t.n++;
    }
    return t;
  };
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);  // brute force stays cheap
    Tree a = random_tree(n), b = random_tree(n);
    CHECK((canonical_code(a) == canonical_code(b)) == brute_iso(a, b));
    // relabeling invariance
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Tree c{n, {}};
    for (auto [u, v] : a.edges) c.edges.push_back({perm[u], perm[v]});
    CHECK(canonical_code(a) == canonical_code(c));
  }
}

TEST_CASE("non-trees are rejected") {
  Tree cycle{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  CHECK(!cycle.is_tree());
  CHECK_THROWS_AS(canonical_code(cycle), NotATree);
}

TEST_CASE("tree editing helpers") {
  Tree t = Tree::single_edge();
  Tree s = subdivide_edge(t, 0, 2);
  CHECK(s.n == 4);
  CHECK(canonical_code(s) == canonical_code(Tree::path(4)));
  Tree u = attach_path(s, 2, 1);
  CHECK(u.n == 5);
  CHECK(u.is_tree());
}

TEST_CASE("all_trees_up_to counts match the free-tree sequence") {
  // 1, 1, 1, 2, 3, 6, 11, 23 free trees on 1..8 vertices
  auto trees = all_trees_up_to(8);
  int counts[9] = {0};
  for (const auto& t : trees) counts[t.n]++;
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 1);
  CHECK(counts[4] == 2);
  CHECK(counts[5] == 3);
  CHECK(counts[6] == 6);
  CHECK(counts[7] == 11);
  CHECK(counts[8] == 23);
}
