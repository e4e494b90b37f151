#include <doctest.h>

#include <map>

#include "shapes.hpp"
#include "unfold/error.hpp"
#include "unfold/hull.hpp"
#include "unfold/path.hpp"
#include "unfold/surgery.hpp"
#include "unfold/verify.hpp"

using namespace unfold;

namespace {

// Open fan of n triangles around hub 0: (0, i+1, i+2).
Disk fan_disk(int n) {
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < n; ++i) tris.push_back({0, i + 1, i + 2});
  return make_disk(tris);
}

// Middle triangle (0,1,2) flanked across both interior edges; removing it
// pinches the complex at vertex 2.
Disk pinch_disk() { return make_disk({{0, 1, 2}, {0, 2, 3}, {2, 1, 4}}); }

}  // namespace

TEST_CASE("wings of disk vertices") {
  Disk single = make_disk({{0, 1, 2}});
  CHECK(wings(single, 0) == std::vector<int>{0});
  CHECK(wings(single, 1) == std::vector<int>{0});

  Disk quad = make_disk({{0, 1, 3}, {0, 3, 2}});
  CHECK(wings(quad, 0) == std::vector<int>{0, 1});

  Disk fan = fan_disk(4);
  CHECK(wings(fan, 0) == std::vector<int>{0, 3});  // the two extreme triangles
}

TEST_CASE("breaks_disk") {
  Disk fan = fan_disk(4);
  // Rim wing whose apex (the hub) is on the boundary, but an adjacent wing
  // edge is also boundary: peeling keeps a disk.
  CHECK_FALSE(breaks_disk(fan, 0));

  Disk pinch = pinch_disk();
  CHECK(breaks_disk(pinch, 0));  // removal pinches at the apex
  CHECK_FALSE(breaks_disk(pinch, 1));
  CHECK_FALSE(breaks_disk(pinch, 2));

  Disk single = make_disk({{0, 1, 2}});
  CHECK_FALSE(breaks_disk(single, 0));  // whole-disk triangle, by convention
}

TEST_CASE("interior apex never breaks") {
  // Closed fan: the hub is interior, so every rim triangle peels cleanly.
  Disk d = make_disk({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}});
  CHECK_FALSE(d.is_boundary_vertex(0));
  for (int t = 0; t < d.triangle_count(); ++t) CHECK_FALSE(breaks_disk(d, t));
}

TEST_CASE("single triangle path") {
  Disk d = make_disk({{0, 1, 2}});
  UnfoldingPath p = unfolding_path(d, 0, 2);
  CHECK(p.vertices == std::vector<int>{0, 2});
  CHECK(p.elements.size() == 1);
  CHECK(p.elements[0].kind == ElementKind::facet);
  CHECK(check_path(d, p, false).pass);
}

TEST_CASE("two-triangle quad emits an edge node") {
  Disk d = make_disk({{0, 1, 3}, {0, 3, 2}});
  UnfoldingPath p = unfolding_path(d, 0, 3);  // terminals across the interior edge
  CHECK(p.elements.size() == 1);
  CHECK(p.elements[0].kind == ElementKind::edge);
  CHECK(p.elements[0].edge == std::array<int, 2>{0, 3});
  CHECK(check_path(d, p, false).pass);
}

TEST_CASE("cut tetrahedron unfolds") {
  Mesh m = shapes::tetrahedron();
  Disk d = cut_to_disk(m);
  auto [s, t] = pick_terminals(d);
  PathStats st;
  UnfoldingPath p = unfolding_path(d, s, t, &st);
  CHECK(check_path(d, p, false).pass);
  CHECK(st.steps() <= m.triangle_count());

  auto brute = brute_force_facet_path(LatticeGraph::from_disk(d));
  REQUIRE(brute.has_value());
  CHECK(check_path(d, *brute, false).pass);
}

TEST_CASE("invalid terminals") {
  Disk d = make_disk({{0, 1, 2}});
  CHECK_THROWS_AS(unfolding_path(d, 0, 0), Error);
  CHECK_THROWS_AS(unfolding_path(d, 0, 9), Error);

  Disk fan5 = make_disk({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}});
  CHECK_THROWS_AS(unfolding_path(fan5, 0, 1), Error);  // hub is interior
}

TEST_CASE("paths verify over the shape zoo and random hulls") {
  std::vector<Mesh> meshes{shapes::tetrahedron(), shapes::cube(), shapes::octahedron(),
                           shapes::double_pyramid(), shapes::torus()};
  for (std::uint64_t seed = 0; seed < 12; ++seed)
    meshes.push_back(random_hull(4 + static_cast<int>((seed * seed * 3) % 57),
                                 seed + 100));

  for (const Mesh& m : meshes) {
    Disk d = cut_to_disk(m);
    auto [s, t] = pick_terminals(d);
    PathStats st;
    UnfoldingPath p = unfolding_path(d, s, t, &st);
    Report r = check_path(d, p, false);
    INFO("triangles ", m.triangle_count());
    for (const auto& v : r.violations) INFO(v.rule, ": ", v.detail);
    REQUIRE(r.pass);
    CHECK(st.steps() <= m.triangle_count());
    CHECK(p.quad_count() == st.case3b);
  }
}

TEST_CASE("paths verify from every boundary-terminal pair") {
  Mesh m = shapes::octahedron();
  Disk d = cut_to_disk(m);
  for (std::size_t i = 0; i < d.boundary_vertices.size(); ++i)
    for (std::size_t j = 0; j < d.boundary_vertices.size(); ++j) {
      int s = d.boundary_vertices[i], t = d.boundary_vertices[j];
      if (s == t) continue;
      UnfoldingPath p = unfolding_path(d, s, t);
      REQUIRE(check_path(d, p, false).pass);
    }
}

TEST_CASE("brute force finds paths where they exist") {
  auto tetra = brute_force_facet_path(LatticeGraph::from_mesh(shapes::tetrahedron()));
  REQUIRE(tetra.has_value());
  CHECK(check_path(LatticeGraph::from_mesh(shapes::tetrahedron()), *tetra, false).pass);

  auto octa = brute_force_facet_path(LatticeGraph::from_mesh(shapes::octahedron()));
  REQUIRE(octa.has_value());
  CHECK(check_path(LatticeGraph::from_mesh(shapes::octahedron()), *octa, false).pass);
}

TEST_CASE("brute force refuses oversized graphs") {
  Mesh m = random_hull(30, 5);
  CHECK_THROWS_AS(brute_force_facet_path(LatticeGraph::from_mesh(m)), Error);
}

TEST_CASE("truncated cube has no facet path") {
  auto tc = shapes::truncated_cube();
  LatticeGraph g = LatticeGraph::from_faces(static_cast<int>(tc.vertices.size()), tc.faces);
  CHECK(g.facet_count() == 14);
  CHECK(g.vertex_count == 24);
  CHECK_FALSE(brute_force_facet_path(g).has_value());
}
