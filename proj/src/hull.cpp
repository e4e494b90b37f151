#include "unfold/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "unfold/error.hpp"

namespace unfold {

namespace {

// splitmix64; the stream is part of the output contract of experiment mode.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct Face {
  std::array<int, 3> v;
  std::array<int, 3> neighbor;  // across edge (v[k], v[k+1])
  std::vector<int> conflicts;
  bool alive = true;
};

}  // namespace

std::vector<Vec3> random_sphere_points(int n, std::uint64_t seed) {
  Rng rng(seed ^ 0x5bf0a8b1c0de5eedULL);
  std::vector<Vec3> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    // Marsaglia rejection in the cube, normalized to the sphere.
    double x = 2 * rng.uniform() - 1;
    double y = 2 * rng.uniform() - 1;
    double z = 2 * rng.uniform() - 1;
    double r2 = x * x + y * y + z * z;
    if (r2 < 1e-12 || r2 > 1.0) continue;
    double inv = 1.0 / std::sqrt(r2);
    Vec3 p{x * inv, y * inv, z * inv};
    p.x += (2 * rng.uniform() - 1) * 1e-9;
    p.y += (2 * rng.uniform() - 1) * 1e-9;
    p.z += (2 * rng.uniform() - 1) * 1e-9;
    pts.push_back(p);
  }
  return pts;
}

Mesh convex_hull(const std::vector<Vec3>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) fail(errc::too_large, "convex hull needs at least 4 points");

  // Initial affinely independent quadruple.
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i)
    if (norm2(points[i] - points[i0]) > 0) i1 = i;
  for (int i = 1; i < n && i2 < 0; ++i)
    if (i != i1 && triangle_area2_3d(points[i0], points[i1], points[i]) > 0) i2 = i;
  for (int i = 1; i < n && i3 < 0; ++i)
    if (i != i1 && i != i2 && orient3d(points[i0], points[i1], points[i2], points[i]) != 0) i3 = i;
  if (i1 < 0 || i2 < 0 || i3 < 0)
    fail(errc::degenerate_triangle, "input points are affinely dependent");

  Vec3 inside = (points[i0] + points[i1] + points[i2] + points[i3]) * 0.25;
  auto oriented = [&](std::array<int, 3> f) {
    if (orient3d(points[f[0]], points[f[1]], points[f[2]], inside) > 0) std::swap(f[1], f[2]);
    return f;
  };

  std::vector<Face> faces;
  for (auto raw : {std::array<int, 3>{i0, i1, i2}, {i0, i1, i3}, {i0, i2, i3}, {i1, i2, i3}})
    faces.push_back({oriented(raw), {-1, -1, -1}, {}, true});

  auto wire = [&](const std::vector<int>& ids) {
    std::map<std::array<int, 2>, std::array<int, 2>> half;  // (a,b) -> (face, slot)
    for (int f : ids)
      for (int k = 0; k < 3; ++k)
        half[{faces[f].v[k], faces[f].v[(k + 1) % 3]}] = {f, k};
    for (int f : ids)
      for (int k = 0; k < 3; ++k) {
        auto it = half.find({faces[f].v[(k + 1) % 3], faces[f].v[k]});
        if (it != half.end()) {
          faces[f].neighbor[k] = it->second[0];
          faces[it->second[0]].neighbor[it->second[1]] = f;
        }
      }
  };
  wire({0, 1, 2, 3});

  auto visible = [&](int f, int p) {
    return orient3d(points[faces[f].v[0]], points[faces[f].v[1]], points[faces[f].v[2]],
                    points[p]) > 0;
  };

  std::vector<int> owner(n, -1);  // conflicting face per pending point
  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    for (int f = 0; f < 4; ++f)
      if (visible(f, p)) {
        owner[p] = f;
        faces[f].conflicts.push_back(p);
        break;
      }
  }

  std::vector<int> visible_set, horizon_faces;
  for (int p = 0; p < n; ++p) {
    if (owner[p] < 0 || !faces[owner[p]].alive) continue;
    check_internal(visible(owner[p], p), "stale conflict pointer");

    // Flood the faces visible from p.
    visible_set.assign(1, owner[p]);
    faces[owner[p]].alive = false;
    for (std::size_t qi = 0; qi < visible_set.size(); ++qi) {
      int f = visible_set[qi];
      for (int nb : faces[f].neighbor)
        if (faces[nb].alive && visible(nb, p)) {
          faces[nb].alive = false;
          visible_set.push_back(nb);
        }
    }

    // Horizon edges: sides of visible faces bordering live faces.
    std::vector<int> fresh;
    for (int f : visible_set)
      for (int k = 0; k < 3; ++k) {
        int nb = faces[f].neighbor[k];
        if (!faces[nb].alive) continue;
        std::array<int, 3> tri =
            oriented({faces[f].v[k], faces[f].v[(k + 1) % 3], p});
        int id = static_cast<int>(faces.size());
        faces.push_back({tri, {-1, -1, -1}, {}, true});
        fresh.push_back(id);
      }
    std::vector<int> wiring = fresh;
    for (int f : visible_set)
      for (int k = 0; k < 3; ++k)
        if (faces[faces[f].neighbor[k]].alive) wiring.push_back(faces[f].neighbor[k]);
    wire(wiring);

    // Redistribute the dead faces' points over the fresh ones.
    for (int f : visible_set) {
      for (int q : faces[f].conflicts) {
        if (q == p) continue;
        owner[q] = -1;
        for (int nf : fresh)
          if (visible(nf, q)) {
            owner[q] = nf;
            faces[nf].conflicts.push_back(q);
            break;
          }
      }
      faces[f].conflicts.clear();
      faces[f].conflicts.shrink_to_fit();
    }
    owner[p] = -1;
  }

  // Compact to a mesh over the referenced vertices.
  std::vector<int> remap(n, -1);
  std::vector<Vec3> verts;
  std::vector<std::vector<int>> tris;
  for (const Face& f : faces) {
    if (!f.alive) continue;
    std::vector<int> tri(3);
    for (int k = 0; k < 3; ++k) {
      int v = f.v[k];
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(verts.size());
        verts.push_back(points[v]);
      }
      tri[k] = remap[v];
    }
    tris.push_back(tri);
  }
  return build_mesh(verts, tris);
}

}  // namespace unfold
