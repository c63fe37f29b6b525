#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reebcirc/region.hpp"
#include "reebcirc/tree.hpp"

namespace reebcirc {

/// Construction parameters of the inductive tree family. Addresses are
/// slash-separated construction paths: the k-th subdivision vertex of the
/// spine is "k" (1-based), the i-th vertex of the pendant attached there is
/// "k/i", and so on. Edge addresses use the owning unit's prefix plus the
/// 0-based segment index counted from the attach end: spine edges are
/// "0".."n0", pendant-at-"k" edges are "k/0".."k/n".
struct GrammarParams {
  int n0 = 0;
  std::map<std::string, int> attach;        // vertex address -> pendant subdivisions
  std::map<std::string, int> final_subdiv;  // edge address -> n_e (absent = 0)
};

/// One generation unit of the skeleton: the spine or one pendant edge, with
/// its subdivision vertices and the n+1 skeleton segments they create.
struct SkeletonUnit {
  std::string prefix;  // "" for the spine
  int n = 0;
  std::vector<std::string> vertex_addresses;  // n entries, ordered outward
  std::vector<std::string> edge_addresses;    // n+1 entries
  std::vector<int> edge_j;                    // degree-3 endpoints per segment
  std::vector<int> final_counts;              // n_e per segment
};

struct SkeletonLayout {
  std::vector<SkeletonUnit> units;  // units[0] is the spine, then DFS order
  int skeleton_vertices = 0;
};

/// Structural expansion of the params; throws InvalidParams when the attach
/// map misses a degree-2 vertex or names one that never arises.
SkeletonLayout skeleton_layout(const GrammarParams& p);

ValidityReport validate_params(const GrammarParams& p);

Tree generate(const GrammarParams& p);

struct Certificate {
  GrammarParams params;
};

/// Decision procedure for family membership: backtracking over spine choices,
/// pendant path choices and parity designations. Accepts with a certificate
/// whose params regenerate an isomorphic tree; empty on rejection.
std::optional<Certificate> recognize(const Tree& t);

/// All canonical codes of family trees with at most max_vertices vertices
/// (max 16), via bounded exhaustive parameter search, deduplicated.
std::vector<std::pair<std::string, GrammarParams>> enumerate_family(int max_vertices);

}  // namespace reebcirc
