#pragma once
#include <cmath>
#include <numbers>
#include <vector>

#include "unfold/mesh.hpp"

namespace unfold::shapes {

inline Mesh tetrahedron() {
  std::vector<Vec3> pts{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::vector<int>> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return build_mesh(pts, faces);
}

inline Mesh octahedron() {
  std::vector<Vec3> pts{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<std::vector<int>> faces{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                      {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return build_mesh(pts, faces);
}

// Triangulated cube: 8 vertices, 12 triangles.
inline Mesh cube() {
  std::vector<Vec3> pts{{-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
                        {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1}};
  std::vector<std::vector<int>> quads{{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                      {2, 3, 7, 6}, {0, 4, 7, 3}, {1, 2, 6, 5}};
  std::vector<std::vector<int>> faces;
  for (const auto& q : quads) {
    faces.push_back({q[0], q[1], q[2]});
    faces.push_back({q[0], q[2], q[3]});
  }
  return build_mesh(pts, faces);
}

// Double pyramid over a triangle: 5 vertices, 6 triangles.
inline Mesh double_pyramid() {
  std::vector<Vec3> pts{
      {1, 0, 0}, {-0.5, 0.8660254037844386, 0}, {-0.5, -0.8660254037844386, 0},
      {0, 0, 1}, {0, 0, -1}};
  std::vector<std::vector<int>> faces{{0, 1, 3}, {1, 2, 3}, {2, 0, 3},
                                      {1, 0, 4}, {2, 1, 4}, {0, 2, 4}};
  return build_mesh(pts, faces);
}

inline Mesh torus(int nu = 8, int nv = 6, double R = 2.0, double r = 0.7) {
  std::vector<Vec3> pts;
  auto idx = [&](int i, int j) { return (i % nu) * nv + (j % nv); };
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      double th = 2 * std::numbers::pi * i / nu;
      double ph = 2 * std::numbers::pi * j / nv;
      pts.push_back({(R + r * std::cos(ph)) * std::cos(th),
                     (R + r * std::cos(ph)) * std::sin(th), r * std::sin(ph)});
    }
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      int a = idx(i, j), b = idx(i + 1, j), c = idx(i + 1, j + 1), d = idx(i, j + 1);
      faces.push_back({a, b, c});
      faces.push_back({a, c, d});
    }
  return build_mesh(pts, faces);
}

// Truncated cube face lists: 8 triangles and 6 octagons over 24 vertices.
// Not a simplicial mesh; used through LatticeGraph::from_faces and as a
// build_mesh rejection case.
struct PolyhedronFaces {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
};

inline PolyhedronFaces truncated_cube() {
  const double xi = std::sqrt(2.0) - 1.0;
  PolyhedronFaces out;
  // Vertices: permutations (+-xi, +-1, +-1), (+-1, +-xi, +-1), (+-1, +-1, +-xi).
  for (int axis = 0; axis < 3; ++axis)
    for (int s0 = -1; s0 <= 1; s0 += 2)
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2) {
          Vec3 p;
          double c[3] = {s0 * xi, static_cast<double>(s1), static_cast<double>(s2)};
          p.x = c[(3 - axis) % 3];
          p.y = c[(4 - axis) % 3];
          p.z = c[(5 - axis) % 3];
          out.vertices.push_back(p);
        }

  auto find_vertex = [&](double x, double y, double z) {
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
      const Vec3& v = out.vertices[i];
      if (std::abs(v.x - x) < 1e-9 && std::abs(v.y - y) < 1e-9 && std::abs(v.z - z) < 1e-9)
        return static_cast<int>(i);
    }
    return -1;
  };

  // Octagons: the eight vertices with one coordinate at +-1, ordered by angle.
  for (int axis = 0; axis < 3; ++axis)
    for (int sign = -1; sign <= 1; sign += 2) {
      std::vector<std::pair<double, int>> ring;
      for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        const Vec3& v = out.vertices[i];
        double c[3] = {v.x, v.y, v.z};
        if (std::abs(c[axis] - sign) > 1e-9) continue;
        double u = c[(axis + 1) % 3], w = c[(axis + 2) % 3];
        if (std::abs(std::abs(u) - 1) > 1e-9 && std::abs(std::abs(w) - 1) > 1e-9) continue;
        ring.push_back({std::atan2(w, u), static_cast<int>(i)});
      }
      std::sort(ring.begin(), ring.end());
      if (sign < 0) std::reverse(ring.begin(), ring.end());
      std::vector<int> face;
      for (auto& [a, i] : ring) face.push_back(i);
      out.faces.push_back(face);
    }

  // Triangles: one per cube corner.
  for (int sx = -1; sx <= 1; sx += 2)
    for (int sy = -1; sy <= 1; sy += 2)
      for (int sz = -1; sz <= 1; sz += 2) {
        int a = find_vertex(sx * xi, sy, sz);
        int b = find_vertex(sx, sy * xi, sz);
        int c = find_vertex(sx, sy, sz * xi);
        std::vector<int> tri = sx * sy * sz > 0 ? std::vector<int>{a, b, c}
                                                : std::vector<int>{a, c, b};
        out.faces.push_back(tri);
      }
  return out;
}

}  // namespace unfold::shapes
