#include <doctest.h>

#include "unfold/error.hpp"
#include "unfold/hull.hpp"

using namespace unfold;

TEST_CASE("hull of four points is a tetrahedron") {
  std::vector<Vec3> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Mesh m = convex_hull(pts);
  CHECK(m.vertex_count() == 4);
  CHECK(m.triangle_count() == 4);
  CHECK(genus(m) == 0);
}

TEST_CASE("interior points are discarded") {
  std::vector<Vec3> pts{{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {0.5, 0.5, 0.5}};
  Mesh m = convex_hull(pts);
  CHECK(m.vertex_count() == 4);
}

TEST_CASE("random hulls are valid genus-zero meshes containing their points") {
  for (std::uint64_t seed : {1u, 5u, 23u}) {
    int n = 50 + static_cast<int>(seed) * 31;
    auto pts = random_sphere_points(n, seed);
    Mesh m = convex_hull(pts);
    CHECK(genus(m) == 0);
    CHECK(m.triangle_count() == 2 * m.vertex_count() - 4);

    // Every input point lies on or inside every face plane.
    for (const auto& t : m.triangles())
      for (const auto& p : pts)
        CHECK(orient3d(m.vertices()[t[0]], m.vertices()[t[1]], m.vertices()[t[2]], p) <= 0);
  }
}

TEST_CASE("hull generation is deterministic in the seed") {
  Mesh a = random_hull(120, 77);
  Mesh b = random_hull(120, 77);
  REQUIRE(a.vertex_count() == b.vertex_count());
  REQUIRE(a.triangle_count() == b.triangle_count());
  for (int v = 0; v < a.vertex_count(); ++v) {
    CHECK(a.vertices()[v].x == b.vertices()[v].x);
    CHECK(a.vertices()[v].y == b.vertices()[v].y);
    CHECK(a.vertices()[v].z == b.vertices()[v].z);
  }
  CHECK(a.triangles() == b.triangles());
}

TEST_CASE("degenerate input is rejected") {
  std::vector<Vec3> flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 3, 0}};
  CHECK_THROWS_AS(convex_hull(flat), Error);
  CHECK_THROWS_AS(convex_hull({{0, 0, 0}, {1, 0, 0}}), Error);
}
