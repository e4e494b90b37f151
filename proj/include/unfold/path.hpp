#pragma once
#include <array>
#include <optional>
#include <vector>

#include "unfold/mesh.hpp"
#include "unfold/surgery.hpp"

namespace unfold {

enum class ElementKind { facet, edge };

// One non-vertex node of a path: a facet, or an interior edge standing in for
// its two incident facets.
struct PathElement {
  ElementKind kind = ElementKind::facet;
  int facet = -1;
  std::array<int, 2> edge{-1, -1};  // sorted vertex pair when kind == edge

  static PathElement facet_node(int f) { return {ElementKind::facet, f, {-1, -1}}; }
  static PathElement edge_node(int a, int b) {
    return {ElementKind::edge, -1, {std::min(a, b), std::max(a, b)}};
  }
};

// Alternating vertex / element sequence. vertices.size() == elements.size()+1;
// cyclic sequences repeat the first vertex at the end and use facet nodes only.
struct NodeSequence {
  std::vector<int> vertices;
  std::vector<PathElement> elements;
  bool cyclic = false;

  int quad_count() const {
    int n = 0;
    for (const auto& e : elements) n += e.kind == ElementKind::edge;
    return n;
  }
};

using UnfoldingPath = NodeSequence;  // disk-local ids
using FacetPath = NodeSequence;
using FacetCycle = NodeSequence;  // mesh ids, cyclic

// Per-run classifier instrumentation. Exactly one case fires per step; the
// forced counter tracks two-vertex-boundary advances (see unfolding_path).
struct PathStats {
  int case1 = 0;
  int case2a = 0;
  int case2b = 0;
  int case3a = 0;
  int case3b = 0;
  int forced = 0;
  int max_stack = 0;

  int steps() const { return case1 + case2a + case2b + case3a + case3b + forced; }
};

// The 1-2 triangles across the two boundary edges at boundary vertex v.
std::vector<int> wings(const Disk& d, int v);

// True when removing wing T leaves a complex that is not a topological disk:
// the apex opposite T's boundary edge lies on the boundary while both other
// edges are interior. A triangle that is the entire disk returns false.
bool breaks_disk(const Disk& d, int t);

// Unfolding path from s to t covering every facet of the disk exactly once.
// Wing scan order: s-side before t-side, lower-indexed boundary neighbor
// first. Runs on an explicit work stack; linear in the triangle count up to
// boundary-split searches bounded by the smaller side.
UnfoldingPath unfolding_path(const Disk& d, int s, int t, PathStats* stats = nullptr);

// Exhaustive facet-path search over a lattice graph (memoized DFS on
// (vertex, covered-facet set)). Facet count above max_facets is refused.
std::optional<FacetPath> brute_force_facet_path(const LatticeGraph& g, int max_facets = 20);

}  // namespace unfold
