#include "unfold/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "unfold/error.hpp"

namespace unfold {

namespace {

std::string id2(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

// --- exact triangle relation ------------------------------------------------

bool strictly_inside(const Vec2& p, const std::array<Vec2, 3>& t, int orientation) {
  for (int k = 0; k < 3; ++k)
    if (orient2d(t[k], t[(k + 1) % 3], p) != orientation) return false;
  return true;
}

bool inside_closed(const Vec2& p, const std::array<Vec2, 3>& t, int orientation) {
  for (int k = 0; k < 3; ++k)
    if (orient2d(t[k], t[(k + 1) % 3], p) == -orientation) return false;
  return true;
}

bool proper_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool on_segment_collinear(const Vec2& a, const Vec2& b, const Vec2& p) {
  // Assumes a, b, p collinear.
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment_collinear(a, b, c)) return true;
  if (o2 == 0 && on_segment_collinear(a, b, d)) return true;
  if (o3 == 0 && on_segment_collinear(c, d, a)) return true;
  if (o4 == 0 && on_segment_collinear(c, d, b)) return true;
  return false;
}

// Collinear edges overlapping over positive length with both apexes on the
// same side: the interiors meet in a sliver along the shared line.
bool collinear_same_side_overlap(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    Vec2 p1 = a[i], p2 = a[(i + 1) % 3];
    Vec2 apex_a = a[(i + 2) % 3];
    for (int j = 0; j < 3; ++j) {
      Vec2 q1 = b[j], q2 = b[(j + 1) % 3];
      Vec2 apex_b = b[(j + 2) % 3];
      if (orient2d(p1, p2, q1) != 0 || orient2d(p1, p2, q2) != 0) continue;
      // Project on the dominant axis of the carrier line.
      bool use_x = std::abs(p2.x - p1.x) >= std::abs(p2.y - p1.y);
      auto coord = [use_x](const Vec2& v) { return use_x ? v.x : v.y; };
      double lo1 = std::min(coord(p1), coord(p2)), hi1 = std::max(coord(p1), coord(p2));
      double lo2 = std::min(coord(q1), coord(q2)), hi2 = std::max(coord(q1), coord(q2));
      if (std::max(lo1, lo2) >= std::min(hi1, hi2)) continue;  // no positive-length overlap
      int sa = orient2d(p1, p2, apex_a), sb = orient2d(p1, p2, apex_b);
      if (sa != 0 && sa == sb) return true;
    }
  }
  return false;
}

Vec2 centroid(const std::array<Vec2, 3>& t) {
  return {(t[0].x + t[1].x + t[2].x) / 3, (t[0].y + t[1].y + t[2].y) / 3};
}

}  // namespace

TriRelation classify_triangles(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b) {
  int oa = orient2d(a[0], a[1], a[2]);
  int ob = orient2d(b[0], b[1], b[2]);
  check_internal(oa != 0 && ob != 0, "classifier needs nondegenerate triangles");

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (proper_cross(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3])) return TriRelation::overlap;
  for (int i = 0; i < 3; ++i) {
    if (strictly_inside(a[i], b, ob)) return TriRelation::overlap;
    if (strictly_inside(b[i], a, oa)) return TriRelation::overlap;
  }
  if (strictly_inside(centroid(a), b, ob) || strictly_inside(centroid(b), a, oa))
    return TriRelation::overlap;
  if (collinear_same_side_overlap(a, b)) return TriRelation::overlap;

  for (int i = 0; i < 3; ++i) {
    if (inside_closed(a[i], b, ob) || inside_closed(b[i], a, oa)) return TriRelation::touch;
    for (int j = 0; j < 3; ++j)
      if (segments_meet(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3])) return TriRelation::touch;
  }
  return TriRelation::disjoint;
}

Report check_path(const LatticeGraph& g, const NodeSequence& p, bool cyclic) {
  Report r;
  if (p.vertices.size() != p.elements.size() + 1 || p.elements.empty()) {
    r.flag(rules::kAlternation, {}, "sequence must alternate vertex, element, ..., vertex");
    return r;
  }
  for (int v : p.vertices)
    if (v < 0 || v >= g.vertex_count) {
      r.flag(rules::kNonIncident, {v}, "vertex id out of range");
      return r;
    }

  std::vector<int> coverage(g.facet_count(), 0);
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    int a = p.vertices[k], b = p.vertices[k + 1];
    const PathElement& e = p.elements[k];
    if (a == b)
      r.flag(rules::kRepeatedVertex, {static_cast<int>(k)},
             "vertex " + std::to_string(a) + " repeated around element " + std::to_string(k));
    if (e.kind == ElementKind::facet) {
      if (e.facet < 0 || e.facet >= g.facet_count()) {
        r.flag(rules::kNonIncident, {e.facet}, "facet id out of range");
        continue;
      }
      ++coverage[e.facet];
      for (int v : {a, b})
        if (!g.facet_has_vertex(e.facet, v))
          r.flag(rules::kNonIncident, {e.facet, v},
                 "vertex " + std::to_string(v) + " not incident to facet " +
                     std::to_string(e.facet));
    } else {
      if (cyclic) {
        r.flag(rules::kEdgeNodeInCycle, {static_cast<int>(k)},
               "facet cycles admit facet nodes only");
      }
      int eid = g.interior_edge(e.edge[0], e.edge[1]);
      if (eid < 0) {
        r.flag(rules::kEdgeNodeInvalid, {e.edge[0], e.edge[1]},
               "edge " + id2(e.edge[0], e.edge[1]) + " is not an interior edge");
        continue;
      }
      ++coverage[g.edge_facets[eid][0]];
      ++coverage[g.edge_facets[eid][1]];
      // The flanking vertices are the edge endpoints.
      if (!((a == e.edge[0] && b == e.edge[1]) || (a == e.edge[1] && b == e.edge[0])))
        r.flag(rules::kNonIncident, {e.edge[0], e.edge[1]},
               "edge node flanks must be its endpoints");
    }
  }

  for (int f = 0; f < g.facet_count(); ++f) {
    if (coverage[f] == 0)
      r.flag(rules::kUncoveredFacet, {f}, "facet " + std::to_string(f) + " never covered");
    else if (coverage[f] > 1)
      r.flag(rules::kDuplicateFacet, {f},
             "facet " + std::to_string(f) + " covered " + std::to_string(coverage[f]) + " times");
  }

  if (cyclic && p.vertices.front() != p.vertices.back())
    r.flag(rules::kNotClosed, {}, "cycle must end at its starting vertex");
  return r;
}

Report check_path(const Disk& d, const NodeSequence& p, bool cyclic) {
  return check_path(LatticeGraph::from_disk(d), p, cyclic);
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Report check_layout(const Layout& l, const Mesh& m, const LayoutCheckOptions& opts) {
  Report r;
  const int nt = static_cast<int>(l.triangles.size());
  const int ns = static_cast<int>(l.strips.size());
  if (nt == 0 || ns == 0) {
    r.flag(rules::kStripOrder, {}, "empty layout");
    return r;
  }

  // Isometry against the source triangles: all three edge lengths within
  // relative 1e-9.
  for (int i = 0; i < nt; ++i) {
    const auto& pt = l.triangles[i];
    if (pt.source_triangle < 0 || pt.source_triangle >= m.triangle_count()) {
      r.flag(rules::kIsometry, {i}, "placed triangle has no mesh source");
      continue;
    }
    const auto& mt = m.triangles()[pt.source_triangle];
    if (std::array<int, 3>{mt[0], mt[1], mt[2]} != pt.corner_vertices) {
      r.flag(rules::kIsometry, {i, pt.source_triangle}, "corner ids do not match the source");
      continue;
    }
    for (int k = 0; k < 3; ++k) {
      const Vec2& a = pt.points[k];
      const Vec2& b = pt.points[(k + 1) % 3];
      double d2 = distance(a, b);
      double d3 = distance(m.vertices()[mt[k]], m.vertices()[mt[(k + 1) % 3]]);
      // 1e-9 relative, plus a representability floor: far from the origin a
      // stored corner is quantized to the ulp of its coordinates, which can
      // exceed 1e-9 of a very short edge without any modeling error.
      double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y)});
      double tol = 1e-9 * std::max(d3, 1e-300) + 16 * 2.220446049250313e-16 * scale;
      if (std::abs(d2 - d3) > tol)
        r.flag(rules::kIsometry, {i, pt.source_triangle},
               "edge " + std::to_string(k) + " length " + std::to_string(d2) + " vs " +
                   std::to_string(d3));
    }
  }

  // Strip structure: positive widths, abutting intervals, triangle membership.
  for (int s = 0; s < ns; ++s) {
    const Strip& st = l.strips[s];
    if (!(st.left < st.right))
      r.flag(rules::kStripOrder, {s}, "strip " + std::to_string(s) + " has no width");
    if (s + 1 < ns && l.strips[s].right != l.strips[s + 1].left)
      r.flag(rules::kStripOrder, {s, s + 1}, "strips " + id2(s, s + 1) + " do not abut");
    if (st.triangle_count < 1 || st.triangle_count > 2)
      r.flag(rules::kStripOrder, {s}, "strip must hold one or two triangles");
    for (int i = st.first_triangle; i < st.first_triangle + st.triangle_count; ++i)
      if (i < 0 || i >= nt || l.triangles[i].strip != s)
        r.flag(rules::kStripOrder, {s, i}, "strip membership broken");
  }

  // Containment in the closed slab.
  for (int i = 0; i < nt; ++i) {
    const auto& pt = l.triangles[i];
    if (pt.strip < 0 || pt.strip >= ns) {
      r.flag(rules::kStripContainment, {i}, "triangle outside any strip");
      continue;
    }
    const Strip& st = l.strips[pt.strip];
    for (const Vec2& p : pt.points)
      if (!(st.left <= p.x && p.x <= st.right))
        r.flag(rules::kStripContainment, {i, pt.strip},
               "corner x " + std::to_string(p.x) + " outside [" + std::to_string(st.left) + ", " +
                   std::to_string(st.right) + "]");
  }

  // Pairwise interior disjointness and the contact graph. When the layout is
  // large, containment confines interactions to same-strip and adjacent-strip
  // pairs; otherwise every pair is tested.
  DisjointSets contact(nt);
  auto test_pair = [&](int i, int j) {
    TriRelation rel = classify_triangles(l.triangles[i].points, l.triangles[j].points);
    if (rel == TriRelation::overlap)
      r.flag(rules::kOverlap, {i, j}, "triangles " + id2(i, j) + " have intersecting interiors");
    else if (rel == TriRelation::touch)
      contact.merge(i, j);
  };
  if (opts.force_exhaustive || nt <= opts.exhaustive_limit) {
    for (int i = 0; i < nt; ++i)
      for (int j = i + 1; j < nt; ++j) test_pair(i, j);
  } else {
    for (int s = 0; s < ns; ++s) {
      const Strip& st = l.strips[s];
      if (st.triangle_count == 2) test_pair(st.first_triangle, st.first_triangle + 1);
      if (s + 1 < ns) {
        const Strip& nx = l.strips[s + 1];
        for (int i = st.first_triangle; i < st.first_triangle + st.triangle_count; ++i)
          for (int j = nx.first_triangle; j < nx.first_triangle + nx.triangle_count; ++j)
            test_pair(i, j);
      }
    }
  }

  int roots = 0;
  for (int i = 0; i < nt; ++i) roots += contact.find(i) == i;
  if (roots != 1)
    r.flag(rules::kDisconnected, {},
           "contact graph has " + std::to_string(roots) + " components");

  // Connection chain: each strip boundary is touched in exactly one point,
  // shared by the neighboring strips and realizing the recorded mesh vertex.
  if (l.connections.size() == static_cast<std::size_t>(ns) + 1) {
    for (int s = 0; s < ns; ++s) {
      const Strip& st = l.strips[s];
      for (int side = 0; side < 2; ++side) {
        double x = side == 0 ? st.left : st.right;
        const Connection& c = l.connections[s + side];
        int hits = 0;
        bool point_ok = true, vertex_ok = false;
        for (int i = st.first_triangle; i < st.first_triangle + st.triangle_count; ++i) {
          if (i < 0 || i >= nt) continue;
          const auto& pt = l.triangles[i];
          for (int k = 0; k < 3; ++k)
            if (pt.points[k].x == x) {
              ++hits;
              if (!(pt.points[k] == c.point)) point_ok = false;
              if (pt.corner_vertices[k] == c.mesh_vertex) vertex_ok = true;
            }
        }
        if (hits == 0 || !point_ok || !vertex_ok)
          r.flag(rules::kConnectionMismatch, {s},
                 "strip " + std::to_string(s) + (side == 0 ? " left" : " right") +
                     " boundary does not meet its connection point");
      }
    }
  } else {
    r.flag(rules::kConnectionMismatch, {},
           "expected " + std::to_string(ns + 1) + " connection points, found " +
               std::to_string(l.connections.size()));
  }

  std::sort(r.violations.begin(), r.violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.rule, a.elements, a.detail) < std::tie(b.rule, b.elements, b.detail);
  });
  return r;
}

}  // namespace unfold
