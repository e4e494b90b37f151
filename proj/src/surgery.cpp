#include "unfold/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "unfold/error.hpp"

namespace unfold {

namespace {

// Union-find over triangle corners, used to identify disk-local vertices.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

// Rotates around the head vertex of `side` through interior adjacencies and
// returns the outgoing boundary side of the same sector.
int next_boundary_side(const Disk& d, int side) {
  int t = side / 3, k = side % 3;
  for (;;) {
    int k2 = (k + 1) % 3;
    int opp = d.adjacency[t][k2];
    if (opp < 0) return 3 * t + k2;
    t = opp / 3;
    k = opp % 3;
  }
}

void walk_boundary(Disk& d) {
  d.boundary_sides.clear();
  d.boundary_vertices.clear();
  int first = -1, total = 0;
  for (int s = 0; s < 3 * d.triangle_count(); ++s)
    if (d.adjacency[s / 3][s % 3] < 0) {
      ++total;
      if (first < 0) first = s;
    }
  check_internal(first >= 0, "disk without boundary");
  int s = first;
  do {
    d.boundary_sides.push_back(s);
    d.boundary_vertices.push_back(d.side_tail(s));
    s = next_boundary_side(d, s);
    check_internal(static_cast<int>(d.boundary_sides.size()) <= total, "boundary walk overrun");
  } while (s != first);
  check_internal(static_cast<int>(d.boundary_sides.size()) == total,
                 "boundary is not a single cycle");
}

// Tree-cotree cut graph: primal BFS spanning tree, dual BFS spanning tree on
// the remaining edges, leftover edges close 2g independent loops. The cut
// graph is the primal tree plus the leftovers, pruned of degree-1 twigs.
std::vector<char> cut_graph_edges(const Mesh& m) {
  const int nv = m.vertex_count();
  const int ne = m.edge_count();
  const int nf = m.triangle_count();

  std::vector<std::vector<std::array<int, 2>>> incident(nv);  // (edge, other vertex)
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = m.edges()[e].vertices;
    incident[a].push_back({e, b});
    incident[b].push_back({e, a});
  }

  std::vector<char> in_primal(ne, 0);
  std::vector<char> vertex_done(nv, 0);
  std::vector<int> queue{0};
  vertex_done[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (auto [e, w] : incident[v])
      if (!vertex_done[w]) {
        vertex_done[w] = 1;
        in_primal[e] = 1;
        queue.push_back(w);
      }
  }

  std::vector<char> in_dual(ne, 0);
  std::vector<char> tri_done(nf, 0);
  std::vector<int> tqueue{0};
  tri_done[0] = 1;
  for (std::size_t qi = 0; qi < tqueue.size(); ++qi) {
    int t = tqueue[qi];
    for (int k = 0; k < 3; ++k) {
      int e = m.slot_edge(t, k);
      if (in_primal[e]) continue;
      int other = m.neighbor(t, k);
      if (!tri_done[other]) {
        tri_done[other] = 1;
        in_dual[e] = 1;
        tqueue.push_back(other);
      }
    }
  }

  std::vector<char> cut(ne, 0);
  for (int e = 0; e < ne; ++e) cut[e] = in_primal[e] || !in_dual[e];

  std::vector<int> degree(nv, 0);
  for (int e = 0; e < ne; ++e)
    if (cut[e]) {
      ++degree[m.edges()[e].vertices[0]];
      ++degree[m.edges()[e].vertices[1]];
    }
  std::vector<int> prune;
  for (int v = 0; v < nv; ++v)
    if (degree[v] == 1) prune.push_back(v);
  while (!prune.empty()) {
    int v = prune.back();
    prune.pop_back();
    if (degree[v] != 1) continue;
    for (auto [e, w] : incident[v])
      if (cut[e]) {
        cut[e] = 0;
        degree[v] = 0;
        if (--degree[w] == 1) prune.push_back(w);
        break;
      }
  }
  return cut;
}

Disk assemble_disk(const Mesh& m, const std::vector<char>& cut) {
  const int nf = m.triangle_count();
  Disk d;
  d.triangle_origin.resize(nf);
  std::iota(d.triangle_origin.begin(), d.triangle_origin.end(), 0);

  // Glue corners across every uncut edge; corner classes become disk vertices.
  UnionFind uf(3 * nf);
  d.adjacency.assign(nf, {-1, -1, -1});
  for (int t = 0; t < nf; ++t) {
    for (int k = 0; k < 3; ++k) {
      int e = m.slot_edge(t, k);
      if (cut[e]) continue;
      int other = m.neighbor(t, k);
      // Locate the partner slot carrying the reversed side.
      int a = m.triangles()[t][k], b = m.triangles()[t][(k + 1) % 3];
      int k2 = -1;
      for (int j = 0; j < 3; ++j)
        if (m.triangles()[other][j] == b && m.triangles()[other][(j + 1) % 3] == a) k2 = j;
      check_internal(k2 >= 0, "adjacency without reversed side");
      d.adjacency[t][k] = 3 * other + k2;
      uf.merge(3 * t + k, 3 * other + (k2 + 1) % 3);            // tails meet heads
      uf.merge(3 * t + (k + 1) % 3, 3 * other + k2);
    }
  }

  std::vector<int> label(3 * nf, -1);
  d.triangles.assign(nf, {});
  for (int t = 0; t < nf; ++t) {
    for (int c = 0; c < 3; ++c) {
      int root = uf.find(3 * t + c);
      if (label[root] < 0) {
        label[root] = d.vertex_count++;
        d.vertex_origin.push_back(m.triangles()[t][c]);
      }
      d.triangles[t][c] = label[root];
    }
  }

  for (int e = 0; e < m.edge_count(); ++e)
    if (cut[e]) d.cut_edges.push_back(m.edges()[e].vertices);
  std::sort(d.cut_edges.begin(), d.cut_edges.end());

  walk_boundary(d);
  d.validate(&m);
  return d;
}

}  // namespace

bool Disk::is_boundary_vertex(int v) const {
  for (int b : boundary_vertices)
    if (b == v) return true;
  return false;
}

bool Disk::is_boundary_edge(int a, int b) const {
  for (int s : boundary_sides) {
    int ta = side_tail(s), he = side_head(s);
    if ((ta == a && he == b) || (ta == b && he == a)) return true;
  }
  return false;
}

int Disk::edge_entity_count() const {
  int interior = 0, boundary = 0;
  for (int t = 0; t < triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) {
      if (adjacency[t][k] < 0)
        ++boundary;
      else
        ++interior;
    }
  return interior / 2 + boundary;
}

void Disk::validate(const Mesh* source) const {
  const int nt = triangle_count();
  check_internal(nt > 0, "empty disk");
  check_internal(static_cast<int>(vertex_origin.size()) == vertex_count, "origin map size");
  check_internal(static_cast<int>(triangle_origin.size()) == nt, "triangle origin size");

  for (int t = 0; t < nt; ++t) {
    const auto& tri = triangles[t];
    for (int c : tri) check_internal(c >= 0 && c < vertex_count, "corner out of range");
    check_internal(tri[0] != tri[1] && tri[1] != tri[2] && tri[0] != tri[2],
                   "repeated disk corner");
    for (int k = 0; k < 3; ++k) {
      int opp = adjacency[t][k];
      if (opp < 0) continue;
      check_internal(opp >= 0 && opp < 3 * nt, "adjacency out of range");
      check_internal(adjacency[opp / 3][opp % 3] == 3 * t + k, "adjacency not involutive");
      check_internal(side_tail(3 * t + k) == side_head(opp) && side_head(3 * t + k) == side_tail(opp),
                     "adjacent sides not reversed");
    }
  }

  // Connected over triangle adjacency.
  std::vector<char> seen(nt, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int k = 0; k < 3; ++k)
      if (adjacency[t][k] >= 0 && !seen[adjacency[t][k] / 3]) {
        seen[adjacency[t][k] / 3] = 1;
        ++reached;
        stack.push_back(adjacency[t][k] / 3);
      }
  }
  check_internal(reached == nt, "disk not connected");

  int chi = vertex_count - edge_entity_count() + nt;
  check_internal(chi == 1, "disk Euler characteristic is not 1");

  // One boundary cycle, each boundary vertex visited once.
  check_internal(!boundary_sides.empty() &&
                     boundary_sides.size() == boundary_vertices.size(),
                 "boundary records inconsistent");
  std::vector<char> visited(vertex_count, 0);
  for (std::size_t i = 0; i < boundary_sides.size(); ++i) {
    int s = boundary_sides[i];
    check_internal(adjacency[s / 3][s % 3] < 0, "boundary side not on boundary");
    check_internal(side_tail(s) == boundary_vertices[i], "boundary vertex order");
    check_internal(side_head(s) == boundary_vertices[(i + 1) % boundary_vertices.size()],
                   "boundary cycle broken");
    check_internal(!visited[side_tail(s)], "boundary visits a vertex twice");
    visited[side_tail(s)] = 1;
  }

  if (source) {
    check_internal(nt == source->triangle_count(), "triangle count changed by cut");
    std::vector<char> used(source->triangle_count(), 0);
    for (int t = 0; t < nt; ++t) {
      int o = triangle_origin[t];
      check_internal(o >= 0 && o < source->triangle_count() && !used[o],
                     "triangle origin not a bijection");
      used[o] = 1;
      for (int c = 0; c < 3; ++c)
        check_internal(vertex_origin[triangles[t][c]] == source->triangles()[o][c],
                       "corner origin mismatch");
    }
  }
}

Disk cut_to_disk(const Mesh& m) {
  std::vector<char> cut(m.edge_count(), 0);
  if (genus(m) == 0) {
    cut[0] = 1;  // edges are ordered lexicographically; edge 0 is the smallest
  } else {
    cut = cut_graph_edges(m);
  }
  return assemble_disk(m, cut);
}

std::pair<int, int> pick_terminals(const Disk& d) {
  check_internal(d.boundary_vertices.size() >= 2, "fewer than two boundary vertices");
  if (!d.cut_edges.empty()) {
    auto [a, b] = d.cut_edges.front();
    int s = -1, t = -1;
    for (int v : d.boundary_vertices) {
      if (d.vertex_origin[v] == a && (s < 0 || v < s)) s = v;
      if (d.vertex_origin[v] == b && (t < 0 || v < t)) t = v;
    }
    check_internal(s >= 0 && t >= 0 && s != t, "cut edge endpoints not on boundary");
    return {s, t};
  }
  // No provenance: smallest boundary vertex, and the one farthest along the
  // cycle from it (ties to the smaller id).
  const int n = static_cast<int>(d.boundary_vertices.size());
  int si = 0;
  for (int i = 1; i < n; ++i)
    if (d.boundary_vertices[i] < d.boundary_vertices[si]) si = i;
  int best = -1, best_dist = -1;
  for (int i = 0; i < n; ++i) {
    if (i == si) continue;
    int fwd = (i - si + n) % n;
    int dist = std::min(fwd, n - fwd);
    int v = d.boundary_vertices[i];
    if (dist > best_dist || (dist == best_dist && v < best)) {
      best = v;
      best_dist = dist;
    }
  }
  return {d.boundary_vertices[si], best};
}

Disk make_disk(const std::vector<std::array<int, 3>>& triangles) {
  Disk d;
  d.triangles = triangles;
  const int nt = d.triangle_count();
  int maxv = -1;
  for (const auto& t : triangles) maxv = std::max({maxv, t[0], t[1], t[2]});
  d.vertex_count = maxv + 1;
  d.vertex_origin.resize(d.vertex_count);
  std::iota(d.vertex_origin.begin(), d.vertex_origin.end(), 0);
  d.triangle_origin.resize(nt);
  std::iota(d.triangle_origin.begin(), d.triangle_origin.end(), 0);

  std::map<std::array<int, 2>, int> directed;
  for (int t = 0; t < nt; ++t)
    for (int k = 0; k < 3; ++k) {
      int a = d.triangles[t][k], b = d.triangles[t][(k + 1) % 3];
      auto [it, fresh] = directed.insert({{a, b}, 3 * t + k});
      if (!fresh) fail(errc::inconsistent_orientation, "directed side repeated");
    }
  d.adjacency.assign(nt, {-1, -1, -1});
  for (auto& [key, s] : directed) {
    auto rev = directed.find({key[1], key[0]});
    if (rev != directed.end()) d.adjacency[s / 3][s % 3] = rev->second;
  }
  walk_boundary(d);
  d.validate();
  return d;
}

}  // namespace unfold
