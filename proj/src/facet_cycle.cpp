#include "unfold/facet_cycle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>

#include "unfold/error.hpp"

namespace unfold {

namespace {

std::uint64_t side_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Genus-zero combinatorial triangulation under edge contraction. Vertex and
// triangle ids stay stable across contractions; coordinates are irrelevant
// here and restored by the caller when a Mesh is materialized.
class MutableTriangulation {
 public:
  explicit MutableTriangulation(const Mesh& m)
      : corners_(m.triangles()),
        tri_alive_(m.triangle_count(), 1),
        vertex_alive_(m.vertex_count(), 1),
        degree_(m.vertex_count(), 0),
        hint_(m.vertex_count(), -1),
        alive_vertices_(m.vertex_count()),
        alive_triangles_(m.triangle_count()) {
    side_.reserve(3 * m.triangle_count() * 2);
    for (int t = 0; t < m.triangle_count(); ++t) {
      const auto& tr = corners_[t];
      for (int k = 0; k < 3; ++k)
        side_[side_key(tr[k], tr[(k + 1) % 3])] = {t, tr[(k + 2) % 3]};
    }
    for (const auto& e : m.edges()) {
      ++degree_[e.vertices[0]];
      ++degree_[e.vertices[1]];
      hint_[e.vertices[0]] = e.vertices[1];
      hint_[e.vertices[1]] = e.vertices[0];
    }
  }

  int alive_vertices() const { return alive_vertices_; }
  int alive_triangles() const { return alive_triangles_; }
  int degree(int v) const { return degree_[v]; }
  bool vertex_alive(int v) const { return vertex_alive_[v]; }
  bool triangle_alive(int t) const { return tri_alive_[t]; }
  const std::vector<std::array<int, 3>>& corners() const { return corners_; }
  const std::vector<char>& triangle_alive_flags() const { return tri_alive_; }

  bool has_edge(int a, int b) const { return side_.count(side_key(a, b)) > 0; }

  // Ccw link of x and the aligned star triangles; rotated so link[0] == y0
  // when y0 >= 0. star[i] is the triangle carrying the directed side
  // (x -> link[i]), i.e. triangle (x, link[i], link[i+1]).
  void link_of(int x, int y0, std::vector<int>& link, std::vector<int>& star) const {
    link.clear();
    star.clear();
    int u = y0 >= 0 ? y0 : hint_[x];
    const int start = u;
    do {
      auto it = side_.find(side_key(x, u));
      check_internal(it != side_.end(), "link walk fell off the star");
      link.push_back(u);
      star.push_back(it->second[0]);
      u = it->second[1];
      check_internal(static_cast<int>(link.size()) <= degree_[x], "link walk overran the degree");
    } while (u != start);
    check_internal(static_cast<int>(link.size()) == degree_[x], "link misses neighbors");
  }

  int common_neighbor_count(int x, int y) const {
    std::vector<int> link, star;
    link_of(x, y, link, star);
    int common = 0;
    for (int z : link)
      if (z != y && has_edge(z, y)) ++common;
    return common;
  }

  ContractionRecord contract(int x, int y) {
    ContractionRecord rec;
    rec.removed_vertex = x;
    rec.kept_vertex = y;
    link_of(x, y, rec.link, rec.star_triangles);
    const int k = static_cast<int>(rec.link.size());
    check_internal(k >= 3, "degenerate link");
    rec.destroyed = {rec.star_triangles[0], rec.star_triangles[k - 1]};

    // Drop all sides touching the star, then re-insert the rewritten ones.
    for (int i = 0; i < k; ++i) {
      int u = rec.link[i], v = rec.link[(i + 1) % k];
      side_.erase(side_key(x, u));
      side_.erase(side_key(u, x));
      side_.erase(side_key(u, v));
    }
    for (int i = 1; i < k - 1; ++i) {
      int t = rec.star_triangles[i];
      int u = rec.link[i], v = rec.link[i + 1];
      side_[side_key(y, u)] = {t, v};
      side_[side_key(u, v)] = {t, y};
      side_[side_key(v, y)] = {t, u};
      auto& c = corners_[t];
      for (int j = 0; j < 3; ++j)
        if (c[j] == x) c[j] = y;
    }

    tri_alive_[rec.destroyed[0]] = 0;
    tri_alive_[rec.destroyed[1]] = 0;
    alive_triangles_ -= 2;
    vertex_alive_[x] = 0;
    --alive_vertices_;

    degree_[y] += k - 4;
    degree_[rec.link[1]] -= 1;
    degree_[rec.link[k - 1]] -= 1;
    degree_[x] = 0;
    hint_[y] = rec.link[1];
    for (int i = 1; i < k; ++i)
      if (hint_[rec.link[i]] == x) hint_[rec.link[i]] = y;
    return rec;
  }

 private:
  std::unordered_map<std::uint64_t, std::array<int, 2>> side_;  // (a,b) -> {tri, third}
  std::vector<std::array<int, 3>> corners_;
  std::vector<char> tri_alive_;
  std::vector<char> vertex_alive_;
  std::vector<int> degree_;
  std::vector<int> hint_;
  int alive_vertices_;
  int alive_triangles_;
};

// Lowest-degree vertex with a contractible edge; ties to the smaller id,
// neighbor candidates scanned in ascending id order. In a genus-zero
// triangulation above K4 the minimum-degree vertex always has one.
std::array<int, 2> pick_contraction(const MutableTriangulation& mt,
                                    std::priority_queue<std::pair<int, int>,
                                                        std::vector<std::pair<int, int>>,
                                                        std::greater<>>& queue) {
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (!mt.vertex_alive(x) || mt.degree(x) != d) continue;  // stale entry
    check_internal(d <= 6, "minimum degree above 6 at genus zero");
    std::vector<int> link, star;
    mt.link_of(x, -1, link, star);
    std::sort(link.begin(), link.end());
    for (int y : link)
      if (mt.common_neighbor_count(x, y) == 2) return {x, y};
    check_internal(false, "no contractible edge at a minimum-degree vertex");
  }
  check_internal(false, "contraction queue exhausted");
  return {-1, -1};
}

// Base cover over a K4 complex with arbitrary ids: with alive vertices
// p < q < r < s, walk facets (pqr) (qrs) (prs) (pqs) through flanks
// (p,q) (q,r) (r,s) (s,p) -- a single closed tour touching each vertex twice.
void base_k4_into(EvenCoverGraph& cover, const std::vector<std::array<int, 3>>& corners,
                  const std::vector<char>& alive) {
  std::vector<int> vs;
  std::map<std::array<int, 3>, int> by_set;
  for (int t = 0; t < static_cast<int>(corners.size()); ++t) {
    if (!alive[t]) continue;
    std::array<int, 3> key = corners[t];
    std::sort(key.begin(), key.end());
    by_set[key] = t;
    for (int v : key)
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  }
  check_internal(by_set.size() == 4 && vs.size() == 4, "complex is not K4");
  std::sort(vs.begin(), vs.end());
  auto [p, q, r, s] = std::array<int, 4>{vs[0], vs[1], vs[2], vs[3]};
  auto facet = [&](int a, int b, int c) {
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    auto it = by_set.find(key);
    check_internal(it != by_set.end(), "missing K4 facet");
    return it->second;
  };
  cover.assign(facet(p, q, r), p, q);
  cover.assign(facet(q, r, s), q, r);
  cover.assign(facet(p, r, s), r, s);
  cover.assign(facet(p, q, s), s, p);
}

void lift_in_place(EvenCoverGraph& c, const ContractionRecord& rec) {
  const int k = static_cast<int>(rec.link.size());
  const int x = rec.removed_vertex;

  // Remove the portion of the cover inside the link: the surviving star
  // triangles. The destroyed pair must not be covered yet.
  for (int i = 0; i < k; ++i) {
    int t = rec.star_triangles[i];
    if (t == rec.destroyed[0] || t == rec.destroyed[1]) {
      check_internal(!c.has(t), "destroyed facet already covered");
      continue;
    }
    check_internal(c.has(t), "star facet missing from cover");
    c.unassign(t);
  }

  // Parity labels on the remainder, then the augmentation rule: an odd link
  // vertex routes its triangle through x, an even one covers it locally.
  std::vector<char> odd(k);
  int odd_count = 0;
  for (int i = 0; i < k; ++i) {
    odd[i] = c.vertex_degree[rec.link[i]] & 1;
    odd_count += odd[i];
  }
  check_internal(odd_count % 2 == 0, "odd number of odd link vertices");

  for (int i = 0; i < k; ++i) {
    int u = rec.link[i];
    int prev = (i + k - 1) % k;
    int v = rec.link[prev];
    int t = rec.star_triangles[prev];  // triangle (x, v, u)
    if (odd[i])
      c.assign(t, v, x);
    else
      c.assign(t, u, v);
  }

  check_internal(c.vertex_degree[x] % 2 == 0, "x ends with odd degree");
  for (int i = 0; i < k; ++i)
    check_internal(c.vertex_degree[rec.link[i]] % 2 == 0, "link vertex ends with odd degree");
}

}  // namespace

void EvenCoverGraph::assign(int f, int u, int v) {
  check_internal(facet_ends[f][0] < 0, "facet assigned twice");
  check_internal(u != v, "facet flanks must be distinct");
  facet_ends[f] = {u, v};
  ++vertex_degree[u];
  ++vertex_degree[v];
}

void EvenCoverGraph::unassign(int f) {
  auto [u, v] = facet_ends[f];
  check_internal(u >= 0, "facet not assigned");
  --vertex_degree[u];
  --vertex_degree[v];
  facet_ends[f] = {-1, -1};
}

void validate_even_cover(const EvenCoverGraph& c,
                         const std::vector<std::array<int, 3>>& facet_corners,
                         const std::vector<char>& facet_alive) {
  const int nf = static_cast<int>(facet_corners.size());
  check_internal(static_cast<int>(c.facet_ends.size()) == nf, "cover size mismatch");

  std::vector<int> degree(c.vertex_degree.size(), 0);
  for (int f = 0; f < nf; ++f) {
    if (!facet_alive[f]) {
      check_internal(!c.has(f), "dead facet covered");
      continue;
    }
    check_internal(c.has(f), "alive facet uncovered");
    auto [u, v] = c.facet_ends[f];
    check_internal(u != v, "coincident facet flanks");
    const auto& fc = facet_corners[f];
    for (int w : {u, v})
      check_internal(w == fc[0] || w == fc[1] || w == fc[2], "flank not incident to facet");
    ++degree[u];
    ++degree[v];
  }
  for (std::size_t v = 0; v < degree.size(); ++v) {
    check_internal(degree[v] == c.vertex_degree[v], "degree bookkeeping drifted");
    check_internal(degree[v] % 2 == 0, "odd vertex degree in cover");
  }

  // Connectivity over the vertex-facet incidence subgraph.
  int start = -1, facets_total = 0;
  for (int f = 0; f < nf; ++f)
    if (facet_alive[f]) {
      start = f;
      ++facets_total;
    }
  if (facets_total == 0) return;
  std::vector<char> fseen(nf, 0), vseen(c.vertex_degree.size(), 0);
  std::vector<std::pair<char, int>> stack{{1, start}};
  fseen[start] = 1;
  int facets_reached = 1;
  std::vector<std::vector<int>> vertex_to_facets(c.vertex_degree.size());
  for (int f = 0; f < nf; ++f)
    if (c.has(f)) {
      vertex_to_facets[c.facet_ends[f][0]].push_back(f);
      vertex_to_facets[c.facet_ends[f][1]].push_back(f);
    }
  while (!stack.empty()) {
    auto [is_facet, id] = stack.back();
    stack.pop_back();
    if (is_facet) {
      for (int v : c.facet_ends[id])
        if (!vseen[v]) {
          vseen[v] = 1;
          stack.push_back({0, v});
        }
    } else {
      for (int f : vertex_to_facets[id])
        if (!fseen[f]) {
          fseen[f] = 1;
          ++facets_reached;
          stack.push_back({1, f});
        }
    }
  }
  check_internal(facets_reached == facets_total, "cover graph disconnected");
}

std::array<int, 2> select_contractible_edge(const Mesh& m) {
  if (genus(m) != 0) fail(errc::genus_not_zero, "contraction requires genus zero");
  if (m.vertex_count() <= 4) fail(errc::invalid_topology, "K4 has no contractible edge");
  MutableTriangulation mt(m);
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> q;
  for (int v = 0; v < m.vertex_count(); ++v) q.push({mt.degree(v), v});
  return pick_contraction(mt, q);
}

std::pair<Mesh, ContractionRecord> contract_edge(const Mesh& m, std::array<int, 2> e) {
  auto [x, y] = e;
  if (x < 0 || y < 0 || x >= m.vertex_count() || y >= m.vertex_count() || m.edge_index(x, y) < 0)
    fail(errc::not_contractible, "not an edge of the mesh");
  MutableTriangulation mt(m);
  int common = mt.common_neighbor_count(x, y);
  if (common != 2)
    fail(errc::not_contractible, "endpoints share " + std::to_string(common) +
                                     " neighbors; contraction needs exactly 2");
  ContractionRecord rec = mt.contract(x, y);

  // Materialize the contracted mesh with compacted ids.
  rec.vertex_map.assign(m.vertex_count(), -1);
  rec.triangle_map.assign(m.triangle_count(), -1);
  std::vector<Vec3> points;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (mt.vertex_alive(v)) {
      rec.vertex_map[v] = static_cast<int>(points.size());
      points.push_back(m.vertices()[v]);
    }
  std::vector<std::vector<int>> faces;
  for (int t = 0; t < m.triangle_count(); ++t)
    if (mt.triangle_alive(t)) {
      rec.triangle_map[t] = static_cast<int>(faces.size());
      const auto& c = mt.corners()[t];
      faces.push_back({rec.vertex_map[c[0]], rec.vertex_map[c[1]], rec.vertex_map[c[2]]});
    }
  return {build_mesh(points, faces), std::move(rec)};
}

EvenCoverGraph base_k4_cycle(const Mesh& m) {
  check_internal(m.vertex_count() == 4 && m.triangle_count() == 4,
                 "base cycle requires a tetrahedron");
  auto cover = EvenCoverGraph::empty(4, 4);
  std::vector<char> alive(4, 1);
  base_k4_into(cover, m.triangles(), alive);
  return cover;
}

EvenCoverGraph lift_cycle(const EvenCoverGraph& cq, const ContractionRecord& rec) {
  if (rec.vertex_map.empty()) {
    EvenCoverGraph c = cq;
    lift_in_place(c, rec);
    return c;
  }
  // Translate the cover from the compacted Q id space back to P ids.
  auto c = EvenCoverGraph::empty(static_cast<int>(rec.triangle_map.size()),
                                 static_cast<int>(rec.vertex_map.size()));
  std::vector<int> vertex_unmap(cq.vertex_degree.size(), -1);
  for (std::size_t v = 0; v < rec.vertex_map.size(); ++v)
    if (rec.vertex_map[v] >= 0) vertex_unmap[rec.vertex_map[v]] = static_cast<int>(v);
  for (std::size_t f = 0; f < rec.triangle_map.size(); ++f) {
    int qf = rec.triangle_map[f];
    if (qf >= 0 && cq.has(qf))
      c.assign(static_cast<int>(f), vertex_unmap[cq.facet_ends[qf][0]],
               vertex_unmap[cq.facet_ends[qf][1]]);
  }
  lift_in_place(c, rec);
  return c;
}

FacetCycle eulerian_facet_cycle(const EvenCoverGraph& c) {
  const int nf = static_cast<int>(c.facet_ends.size());
  int first = -1, total = 0;
  for (int f = 0; f < nf; ++f)
    if (c.has(f)) {
      if (first < 0) first = f;
      ++total;
    }
  check_internal(total > 0, "empty cover");

  std::vector<std::vector<std::array<int, 2>>> adj(c.vertex_degree.size());  // (facet, other)
  for (int f = 0; f < nf; ++f)
    if (c.has(f)) {
      auto [u, v] = c.facet_ends[f];
      adj[u].push_back({f, v});
      adj[v].push_back({f, u});
    }

  std::vector<std::size_t> ptr(c.vertex_degree.size(), 0);
  std::vector<char> used(nf, 0);
  std::vector<std::array<int, 2>> stack;  // (vertex, facet that led here)
  std::vector<std::array<int, 2>> circuit;
  stack.push_back({std::min(c.facet_ends[first][0], c.facet_ends[first][1]), -1});
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    auto& i = ptr[v];
    while (i < adj[v].size() && used[adj[v][i][0]]) ++i;
    if (i == adj[v].size()) {
      circuit.push_back({v, via});
      stack.pop_back();
    } else {
      used[adj[v][i][0]] = 1;
      stack.push_back({adj[v][i][1], adj[v][i][0]});
    }
  }
  check_internal(static_cast<int>(circuit.size()) == total + 1,
                 "cover graph does not support a single tour");

  FacetCycle cycle;
  cycle.cyclic = true;
  std::reverse(circuit.begin(), circuit.end());
  cycle.vertices.push_back(circuit[0][0]);
  for (std::size_t i = 1; i < circuit.size(); ++i) {
    cycle.elements.push_back(PathElement::facet_node(circuit[i][1]));
    cycle.vertices.push_back(circuit[i][0]);
  }
  check_internal(cycle.vertices.front() == cycle.vertices.back(), "tour not closed");
  return cycle;
}

FacetCycle facet_cycle(const Mesh& m, bool deep_checks) {
  if (genus(m) != 0)
    fail(errc::genus_not_zero, "facet cycles are constructed for genus zero only");

  MutableTriangulation mt(m);
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>>
      queue;
  for (int v = 0; v < m.vertex_count(); ++v) queue.push({mt.degree(v), v});

  struct Snapshot {
    std::vector<std::array<int, 3>> corners;
    std::vector<char> alive;
  };
  std::vector<ContractionRecord> records;
  std::vector<Snapshot> snapshots;  // complex before each contraction (deep checks)

  while (mt.alive_vertices() > 4) {
    if (deep_checks) snapshots.push_back({mt.corners(), mt.triangle_alive_flags()});
    auto [x, y] = pick_contraction(mt, queue);
    records.push_back(mt.contract(x, y));
    queue.push({mt.degree(y), y});
    for (int u : records.back().link)
      if (mt.vertex_alive(u)) queue.push({mt.degree(u), u});
  }

  auto cover = EvenCoverGraph::empty(m.triangle_count(), m.vertex_count());
  base_k4_into(cover, mt.corners(), mt.triangle_alive_flags());
  if (deep_checks) validate_even_cover(cover, mt.corners(), mt.triangle_alive_flags());

  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    lift_in_place(cover, *it);
    if (deep_checks) {
      const auto& snap = snapshots[records.rend() - it - 1];
      validate_even_cover(cover, snap.corners, snap.alive);
    }
  }
  return eulerian_facet_cycle(cover);
}

}  // namespace unfold
