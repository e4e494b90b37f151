#pragma once
#include <array>
#include <utility>
#include <vector>

#include "unfold/mesh.hpp"

namespace unfold {

// Triangulated topological disk with an explicit boundary cycle, produced by
// cutting a closed Mesh along edges. Disk-local vertex ids: a mesh vertex of
// degree k in the cut graph appears as k disk-local copies (one per sector of
// its star). Sides are numbered 3*t + k; side k runs corner k -> corner k+1.
struct Disk {
  std::vector<std::array<int, 3>> triangles;   // disk-local corner ids, ccw
  std::vector<std::array<int, 3>> adjacency;   // side -> opposite side, or -1 on boundary
  std::vector<int> vertex_origin;              // disk vertex -> mesh vertex
  std::vector<int> triangle_origin;            // disk triangle -> mesh triangle
  std::vector<int> boundary_vertices;          // cyclic; entry i is the tail of boundary_sides[i]
  std::vector<int> boundary_sides;             // side ids in cycle order
  std::vector<std::array<int, 2>> cut_edges;   // cut mesh edges (sorted pairs), ascending
  int vertex_count = 0;

  int triangle_count() const { return static_cast<int>(triangles.size()); }
  int adjacent(int t, int k) const { return adjacency[t][k]; }
  bool side_is_boundary(int t, int k) const { return adjacency[t][k] < 0; }
  bool side_is_boundary(int s) const { return adjacency[s / 3][s % 3] < 0; }
  int side_tail(int s) const { return triangles[s / 3][s % 3]; }
  int side_head(int s) const { return triangles[s / 3][(s % 3 + 1) % 3]; }

  bool is_boundary_vertex(int v) const;
  // True when some boundary side spans the unordered pair (a, b).
  bool is_boundary_edge(int a, int b) const;

  // Interior edge count + boundary side count.
  int edge_entity_count() const;

  // Throws on any violated disk invariant (Euler characteristic 1, single
  // boundary cycle, involutive adjacency, coherent origin maps).
  void validate(const Mesh* source = nullptr) const;
};

// Cuts a closed mesh to a single disk. Genus zero cuts exactly one edge (the
// lexicographically smallest); positive genus cuts along a tree-cotree cut
// graph (primal spanning tree plus leftover edges, pruned of degree-1 twigs).
Disk cut_to_disk(const Mesh& m);

// Start and end vertices for an unfolding path: the disk-local copies of the
// endpoints of the smallest cut edge, or a deterministic boundary pair for
// disks without cut provenance.
std::pair<int, int> pick_terminals(const Disk& d);

// Assembles a Disk from raw triangles, deriving adjacency by matching vertex
// pairs (test helper; cut_to_disk wires adjacency directly and is the only
// route that can produce two boundary edges over the same vertex pair).
Disk make_disk(const std::vector<std::array<int, 3>>& triangles);

}  // namespace unfold
