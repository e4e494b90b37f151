#include <doctest.h>

#include <array>
#include <functional>
#include <set>

#include "shapes.hpp"
#include "unfold/error.hpp"
#include "unfold/hull.hpp"
#include "unfold/mesh.hpp"

using namespace unfold;

namespace {

std::vector<Vec3> tetra_points() {
  return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal;
}

}  // namespace

TEST_CASE("tetrahedron builds with six edges") {
  Mesh m = shapes::tetrahedron();
  CHECK(m.vertex_count() == 4);
  CHECK(m.triangle_count() == 4);
  CHECK(m.edge_count() == 6);
  CHECK(genus(m) == 0);
}

TEST_CASE("build_mesh rejections") {
  auto pts = tetra_points();

  CHECK(code_of([&] {
          build_mesh(pts, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2, 0}});
        }) == errc::non_simplicial_face);

  CHECK(code_of([&] {
          build_mesh(pts, {{0, 1, 7}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
        }) == errc::index_out_of_range);

  // Reversed face: its edges are traversed twice in the same direction.
  CHECK(code_of([&] {
          build_mesh(pts, {{0, 2, 1}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
        }) == errc::inconsistent_orientation);

  // Missing face leaves open edges.
  CHECK(code_of([&] { build_mesh(pts, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}}); }) ==
        errc::non_manifold_edge);

  // Zero-area triangle.
  std::vector<Vec3> flat{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}};
  CHECK(code_of([&] {
          build_mesh(flat, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
        }) == errc::degenerate_triangle);

  // Two disjoint tetrahedra.
  std::vector<Vec3> two = tetra_points();
  for (const Vec3& p : tetra_points()) two.push_back(p + Vec3{10, 0, 0});
  CHECK(code_of([&] {
          build_mesh(two, {{0, 1, 2},
                           {0, 2, 3},
                           {0, 3, 1},
                           {1, 3, 2},
                           {4, 5, 6},
                           {4, 6, 7},
                           {4, 7, 5},
                           {5, 7, 6}});
        }) == errc::disconnected_surface);

  CHECK(code_of([&] { build_mesh(pts, {{0, 1, 1}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }) ==
        errc::degenerate_triangle);
}

TEST_CASE("truncated cube face list is rejected as nonsimplicial") {
  auto tc = shapes::truncated_cube();
  CHECK(code_of([&] { build_mesh(tc.vertices, tc.faces); }) == errc::non_simplicial_face);
}

TEST_CASE("edge table lists each pair once with two distinct triangles") {
  for (const Mesh& m : {shapes::tetrahedron(), shapes::cube(), shapes::octahedron()}) {
    std::set<std::array<int, 2>> seen;
    for (const Edge& e : m.edges()) {
      CHECK(e.vertices[0] < e.vertices[1]);
      CHECK(seen.insert(e.vertices).second);
      CHECK(e.triangles[0] != e.triangles[1]);
    }
    CHECK(static_cast<int>(seen.size()) == m.edge_count());
  }
}

TEST_CASE("lattice graph counts") {
  LatticeGraph t = LatticeGraph::from_mesh(shapes::tetrahedron());
  CHECK(t.facet_count() == 4);
  CHECK(t.edge_count() == 6);
  CHECK(t.vertex_count == 4);
  CHECK(t.node_count() == 14);
  CHECK(t.arc_count() == 36);  // 12 facet-edge + 12 facet-vertex + 12 edge-vertex

  LatticeGraph c = LatticeGraph::from_mesh(shapes::cube());
  CHECK(c.facet_count() == 12);
  CHECK(c.edge_count() == 18);
  CHECK(c.vertex_count == 8);

  LatticeGraph o = LatticeGraph::from_mesh(shapes::octahedron());
  CHECK(o.facet_count() == 8);
  CHECK(o.edge_count() == 12);
  CHECK(o.vertex_count == 6);
}

TEST_CASE("genus of a torus is one") {
  Mesh t = shapes::torus();
  CHECK(genus(t) == 1);
  CHECK(t.vertex_count() - t.edge_count() + t.triangle_count() == 0);
}

TEST_CASE("lattice counts on random hulls") {
  for (std::uint64_t seed : {3u, 17u, 99u}) {
    Mesh m = random_hull(40 + static_cast<int>(seed), seed);
    CHECK(genus(m) == 0);
    LatticeGraph g = LatticeGraph::from_mesh(m);
    CHECK(g.arc_count() == 6 * m.triangle_count() + 2 * m.edge_count());
    CHECK(3 * m.triangle_count() == 2 * m.edge_count());
    for (int f = 0; f < g.facet_count(); ++f) CHECK(g.facet_vertices[f].size() == 3);
    for (const auto& ef : g.edge_facets) CHECK(ef[1] >= 0);
  }
}
