#pragma once
#include <array>
#include <vector>

#include "unfold/geom.hpp"
#include "unfold/mesh.hpp"
#include "unfold/path.hpp"
#include "unfold/surgery.hpp"

namespace unfold {

struct PlacedTriangle {
  int source_triangle = -1;  // mesh triangle id
  int strip = -1;
  std::array<int, 3> corner_vertices{};  // mesh vertex ids, source corner order
  std::array<Vec2, 3> points{};          // same order as corner_vertices
};

struct Strip {
  double left = 0, right = 0;
  int first_triangle = -1;  // index into Layout::triangles
  int triangle_count = 0;   // 1 (facet node) or 2 (edge node)
};

struct Connection {
  Vec2 point;
  int mesh_vertex = -1;
};

// Consecutive vertical strips, one per path element. connections has one
// entry per strip boundary including the outer two: connections[k] is the
// point shared by strips k-1 and k.
struct Layout {
  std::vector<Strip> strips;
  std::vector<PlacedTriangle> triangles;
  std::vector<Connection> connections;
};

// Isometric planar embedding of one triangle with the entry corner at anchor,
// strictly leftmost, and the exit corner strictly rightmost. The free
// rotation is fixed at the midpoint of the feasible direction arc.
PlacedTriangle place_triangle(const std::array<Vec3, 3>& corners,
                              const std::array<int, 3>& corner_ids, int v_in, int v_out,
                              Vec2 anchor);

// Places the two triangles sharing edge (y, z) into one strip with the entry
// vertex y strictly leftmost and an image of the exit vertex z strictly
// rightmost. A convex flattened quadrilateral is placed rigidly; otherwise
// the shared edge is opened at its convex-angle end by the minimal rotation
// (plus a small separation margin) that restores extremality while keeping
// interiors disjoint. Returns the placed triangles and the exit point.
struct QuadPlacement {
  PlacedTriangle first, second;
  Vec2 exit;
  bool hinged = false;
};
QuadPlacement place_quad(const std::array<Vec3, 3>& f1_corners, const std::array<int, 3>& f1_ids,
                         const std::array<Vec3, 3>& f2_corners, const std::array<int, 3>& f2_ids,
                         int v_in, int v_out, Vec2 anchor);

// Lays out an unfolding path over the disk it was computed on.
Layout layout_path(const NodeSequence& p, const Disk& d, const Mesh& m);

// Lays out a mesh-level sequence (facet cycle or facet path).
Layout layout_path(const NodeSequence& p, const Mesh& m);

}  // namespace unfold
