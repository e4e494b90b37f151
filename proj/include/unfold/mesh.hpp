#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "unfold/geom.hpp"

namespace unfold {

struct Edge {
  std::array<int, 2> vertices;   // sorted pair
  std::array<int, 2> triangles;  // the two incident triangles
};

// Closed, connected, consistently oriented simplicial surface. Immutable after
// construction; all validation happens in build_mesh.
class Mesh {
 public:
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edge id for an unordered vertex pair, or -1.
  int edge_index(int a, int b) const;

  // Neighbor triangle across slot k of triangle t (slot k = the edge between
  // corners k and k+1 mod 3). Closed surface: always a valid triangle id.
  int neighbor(int t, int k) const { return neighbors_[t][k]; }

  // Edge id under slot k of triangle t.
  int slot_edge(int t, int k) const { return slot_edges_[t][k]; }

  Vec3 triangle_point(int t, int corner) const { return vertices_[triangles_[t][corner]]; }

 private:
  friend Mesh build_mesh(const std::vector<Vec3>&, const std::vector<std::vector<int>>&);

  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<Edge> edges_;
  std::map<std::array<int, 2>, int> edge_index_;
  std::vector<std::array<int, 3>> neighbors_;
  std::vector<std::array<int, 3>> slot_edges_;
};

// Validates and assembles a Mesh. Faces of arity != 3 are rejected
// (NonSimplicialFace); every edge must bound exactly two triangles traversed
// in opposite directions; zero-area and duplicate triangles are rejected; the
// surface must form a single component.
Mesh build_mesh(const std::vector<Vec3>& points, const std::vector<std::vector<int>>& faces);

// Handles/genus from the Euler characteristic: g = (2 - V + E - F) / 2.
int genus(const Mesh& m);

struct Disk;  // surgery.hpp

// Incidence structure over facets, edges, and vertices. Built from a Mesh
// (every facet a triangle, every edge interior), from a Disk (boundary edges
// carry one facet), or from a raw polygonal face list (facets of any arity,
// used by the brute-force facet-path search).
struct LatticeGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> facet_vertices;  // corner ids, ccw
  std::vector<std::array<int, 2>> edge_vertices;
  std::vector<std::array<int, 2>> edge_facets;  // second entry -1 on boundary
  std::vector<std::vector<int>> vertex_facets;  // ascending facet ids

  int facet_count() const { return static_cast<int>(facet_vertices.size()); }
  int edge_count() const { return static_cast<int>(edge_vertices.size()); }
  int node_count() const { return facet_count() + edge_count() + vertex_count; }
  // One arc per incidence: facet-edge, facet-vertex, edge-vertex.
  std::int64_t arc_count() const;

  // Interior edge id for an unordered vertex pair, or -1.
  int interior_edge(int a, int b) const;

  bool facet_has_vertex(int f, int v) const;

  static LatticeGraph from_mesh(const Mesh& m);
  static LatticeGraph from_disk(const Disk& d);
  static LatticeGraph from_faces(int vertex_count, const std::vector<std::vector<int>>& faces);

 private:
  std::vector<std::pair<std::array<int, 2>, int>> interior_edge_index_;  // sorted by pair
  void finish();
};

}  // namespace unfold
