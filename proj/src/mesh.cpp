#include "unfold/mesh.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "unfold/error.hpp"
#include "unfold/surgery.hpp"

namespace unfold {

namespace {

// Scale-invariant degeneracy test: a triangle is degenerate when its area is
// at most 1e-12 times the squared longest edge.
bool degenerate(const Vec3& a, const Vec3& b, const Vec3& c) {
  double area2 = triangle_area2_3d(a, b, c);  // twice the area
  double longest2 = std::max({norm2(b - a), norm2(c - b), norm2(a - c)});
  return area2 * 0.5 <= 1e-12 * longest2;
}

}  // namespace

int Mesh::edge_index(int a, int b) const {
  std::array<int, 2> key{std::min(a, b), std::max(a, b)};
  auto it = edge_index_.find(key);
  return it == edge_index_.end() ? -1 : it->second;
}

Mesh build_mesh(const std::vector<Vec3>& points, const std::vector<std::vector<int>>& faces) {
  const int nv = static_cast<int>(points.size());

  Mesh m;
  m.vertices_ = points;
  m.triangles_.reserve(faces.size());

  std::set<std::array<int, 3>> seen;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() != 3)
      fail(errc::non_simplicial_face,
           "face " + std::to_string(f) + " has " + std::to_string(face.size()) + " vertices");
    for (int idx : face)
      if (idx < 0 || idx >= nv)
        fail(errc::index_out_of_range,
             "face " + std::to_string(f) + " references vertex " + std::to_string(idx));
    std::array<int, 3> tri{face[0], face[1], face[2]};
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      fail(errc::degenerate_triangle, "face " + std::to_string(f) + " repeats a vertex");
    std::array<int, 3> key = tri;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second)
      fail(errc::duplicate_triangle, "face " + std::to_string(f) + " duplicates another face");
    if (degenerate(points[tri[0]], points[tri[1]], points[tri[2]]))
      fail(errc::degenerate_triangle, "face " + std::to_string(f) + " has (near-)zero area");
    m.triangles_.push_back(tri);
  }

  const int nf = static_cast<int>(m.triangles_.size());

  // Pair up directed sides. Consistent orientation means every unordered pair
  // appears exactly once in each direction.
  std::map<std::array<int, 2>, std::array<int, 2>> directed;  // (a,b) -> (tri, slot)
  for (int t = 0; t < nf; ++t) {
    for (int k = 0; k < 3; ++k) {
      int a = m.triangles_[t][k];
      int b = m.triangles_[t][(k + 1) % 3];
      auto [it, fresh] = directed.insert({{a, b}, {t, k}});
      if (!fresh)
        fail(errc::inconsistent_orientation, "directed edge " + std::to_string(a) + "->" +
                                                 std::to_string(b) + " traversed twice");
    }
  }

  m.neighbors_.assign(nf, {-1, -1, -1});
  m.slot_edges_.assign(nf, {-1, -1, -1});
  for (auto& [key, side] : directed) {
    auto rev = directed.find({key[1], key[0]});
    if (rev == directed.end())
      fail(errc::non_manifold_edge, "edge " + std::to_string(key[0]) + "-" +
                                        std::to_string(key[1]) + " bounds only one triangle");
    m.neighbors_[side[0]][side[1]] = rev->second[0];
  }

  // Edge table, lexicographic ids.
  for (auto& [key, side] : directed) {
    if (key[0] > key[1]) continue;
    auto rev = directed.find({key[1], key[0]});
    int id = static_cast<int>(m.edges_.size());
    m.edges_.push_back({{key[0], key[1]}, {side[0], rev->second[0]}});
    m.edge_index_[{key[0], key[1]}] = id;
    m.slot_edges_[side[0]][side[1]] = id;
    m.slot_edges_[rev->second[0]][rev->second[1]] = id;
  }

  if (nf == 0) fail(errc::invalid_topology, "empty face list");

  // Single surface component, all vertices referenced.
  std::vector<char> vertex_seen(nv, 0);
  std::vector<int> stack{m.triangles_[0][0]};
  vertex_seen[stack[0]] = 1;
  std::vector<std::vector<int>> vnbr(nv);
  for (const auto& e : m.edges_) {
    vnbr[e.vertices[0]].push_back(e.vertices[1]);
    vnbr[e.vertices[1]].push_back(e.vertices[0]);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : vnbr[v])
      if (!vertex_seen[w]) {
        vertex_seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < nv; ++v)
    if (!vertex_seen[v])
      fail(errc::disconnected_surface, "vertex " + std::to_string(v) + " unreachable");

  // chi = V - E + F must be even and at most 2 for a closed orientable surface.
  int chi = nv - m.edge_count() + nf;
  if (chi > 2 || (2 - chi) % 2 != 0)
    fail(errc::invalid_topology, "Euler characteristic " + std::to_string(chi));

  return m;
}

int genus(const Mesh& m) {
  return (2 - m.vertex_count() + m.edge_count() - m.triangle_count()) / 2;
}

std::int64_t LatticeGraph::arc_count() const {
  std::int64_t facet_edge = 0;
  for (const auto& fv : facet_vertices) facet_edge += static_cast<int>(fv.size());
  // facet-edge and facet-vertex arcs both equal the total facet arity.
  return 2 * facet_edge + 2 * static_cast<std::int64_t>(edge_vertices.size());
}

int LatticeGraph::interior_edge(int a, int b) const {
  std::array<int, 2> key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(interior_edge_index_.begin(), interior_edge_index_.end(), key,
                             [](const auto& entry, const auto& k) { return entry.first < k; });
  return it == interior_edge_index_.end() || it->first != key ? -1 : it->second;
}

bool LatticeGraph::facet_has_vertex(int f, int v) const {
  const auto& fv = facet_vertices[f];
  return std::find(fv.begin(), fv.end(), v) != fv.end();
}

void LatticeGraph::finish() {
  vertex_facets.assign(vertex_count, {});
  for (int f = 0; f < facet_count(); ++f)
    for (int v : facet_vertices[f]) vertex_facets[v].push_back(f);
  interior_edge_index_.clear();
  interior_edge_index_.reserve(edge_count());
  for (int e = 0; e < edge_count(); ++e)
    if (edge_facets[e][1] >= 0) interior_edge_index_.push_back({edge_vertices[e], e});
  std::sort(interior_edge_index_.begin(), interior_edge_index_.end());
}

LatticeGraph LatticeGraph::from_mesh(const Mesh& m) {
  LatticeGraph g;
  g.vertex_count = m.vertex_count();
  g.facet_vertices.reserve(m.triangle_count());
  for (const auto& t : m.triangles()) g.facet_vertices.push_back({t[0], t[1], t[2]});
  g.edge_vertices.reserve(m.edge_count());
  g.edge_facets.reserve(m.edge_count());
  for (const auto& e : m.edges()) {
    g.edge_vertices.push_back(e.vertices);
    g.edge_facets.push_back(e.triangles);
  }
  g.finish();
  return g;
}

LatticeGraph LatticeGraph::from_faces(int vertex_count, const std::vector<std::vector<int>>& faces) {
  LatticeGraph g;
  g.vertex_count = vertex_count;
  g.facet_vertices = faces;
  std::map<std::array<int, 2>, int> index;
  for (int f = 0; f < g.facet_count(); ++f) {
    const auto& fv = g.facet_vertices[f];
    check_internal(fv.size() >= 3, "face with fewer than 3 vertices");
    for (std::size_t k = 0; k < fv.size(); ++k) {
      int a = fv[k], b = fv[(k + 1) % fv.size()];
      if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
        fail(errc::index_out_of_range, "face corner out of range");
      std::array<int, 2> key{std::min(a, b), std::max(a, b)};
      auto it = index.find(key);
      if (it == index.end()) {
        index[key] = static_cast<int>(g.edge_vertices.size());
        g.edge_vertices.push_back(key);
        g.edge_facets.push_back({f, -1});
      } else {
        auto& ef = g.edge_facets[it->second];
        if (ef[1] != -1) fail(errc::non_manifold_edge, "edge bounds more than two faces");
        ef[1] = f;
      }
    }
  }
  for (const auto& ef : g.edge_facets)
    if (ef[1] == -1) fail(errc::non_manifold_edge, "open edge in face lattice");
  g.finish();
  return g;
}

LatticeGraph LatticeGraph::from_disk(const Disk& d) {
  LatticeGraph g;
  g.vertex_count = d.vertex_count;
  g.facet_vertices.reserve(d.triangles.size());
  for (const auto& t : d.triangles) g.facet_vertices.push_back({t[0], t[1], t[2]});

  // Interior edges once, boundary sides individually (a cut edge yields two
  // distinct boundary edges over the same vertex pair).
  const int nt = static_cast<int>(d.triangles.size());
  for (int t = 0; t < nt; ++t) {
    for (int k = 0; k < 3; ++k) {
      int a = d.triangles[t][k], b = d.triangles[t][(k + 1) % 3];
      int opp = d.adjacent(t, k);
      if (opp < 0) {
        g.edge_vertices.push_back({std::min(a, b), std::max(a, b)});
        g.edge_facets.push_back({t, -1});
      } else if (opp / 3 > t || (opp / 3 == t && opp % 3 > k)) {
        g.edge_vertices.push_back({std::min(a, b), std::max(a, b)});
        g.edge_facets.push_back({t, opp / 3});
      }
    }
  }
  g.finish();
  return g;
}

}  // namespace unfold
