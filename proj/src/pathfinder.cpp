#include "unfold/path.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>

#include "unfold/error.hpp"

namespace unfold {

namespace {

// Mutable view of a disk during path construction. Sub-disks created by
// breaking wings are never materialized: the structure represents their
// disjoint union (components share only pinch vertices), and every task
// carries boundary-side handles for its own terminals.
class DiskState {
 public:
  explicit DiskState(const Disk& d)
      : d_(d),
        alive_(d.triangle_count(), 1),
        alive_count_(d.triangle_count()),
        next_b_(3 * d.triangle_count(), -1),
        prev_b_(3 * d.triangle_count(), -1),
        boundary_count_(d.vertex_count, 0) {
    const auto& sides = d.boundary_sides;
    const int n = static_cast<int>(sides.size());
    for (int i = 0; i < n; ++i) {
      link(sides[i], sides[(i + 1) % n]);
      ++boundary_count_[tail(sides[i])];
      ++boundary_count_[head(sides[i])];
    }
  }

  UnfoldingPath run(int s, int t, PathStats* stats);

 private:
  struct WorkItem {
    bool emit;
    // emit payload
    PathElement elem;
    int vertex = -1;
    // solve payload: terminal vertices with their boundary side handles
    int s = -1, s_in = -1, s_out = -1;
    int t = -1, t_in = -1, t_out = -1;
  };

  int tail(int s) const { return d_.side_tail(s); }
  int head(int s) const { return d_.side_head(s); }
  int tri(int s) const { return s / 3; }

  bool side_is_boundary(int s) const {
    int opp = d_.adjacency[s / 3][s % 3];
    return opp < 0 || !alive_[opp / 3];
  }

  void link(int a, int b) {
    next_b_[a] = b;
    prev_b_[b] = a;
  }

  // Rotates around head(side) through alive interior adjacencies; returns the
  // outgoing boundary side of that sector.
  int sector_exit(int side) const {
    int t = side / 3, k = side % 3;
    for (;;) {
      int k2 = (k + 1) % 3;
      int opp = d_.adjacency[t][k2];
      if (opp < 0 || !alive_[opp / 3]) return 3 * t + k2;
      t = opp / 3;
      k = opp % 3;
    }
  }

  void retire_side(int s) {
    --boundary_count_[tail(s)];
    --boundary_count_[head(s)];
  }
  void expose_side(int s) {
    ++boundary_count_[tail(s)];
    ++boundary_count_[head(s)];
  }

  // Removes the wing reached via its boundary side h; the component stays a
  // single disk. Returns (in, out) handles for the apex, the new terminal.
  std::pair<int, int> remove_wing(int h);

  void emit(std::vector<int>& vs, std::vector<PathElement>& els, const PathElement& e, int v) {
    els.push_back(e);
    vs.push_back(v);
  }

  const Disk& d_;
  std::vector<char> alive_;
  int alive_count_;
  std::vector<int> next_b_, prev_b_;
  std::vector<int> boundary_count_;
};

std::pair<int, int> DiskState::remove_wing(int h) {
  const int t = h / 3, k = h % 3;
  const int side_bc = 3 * t + (k + 1) % 3;
  const int side_ca = 3 * t + (k + 2) % 3;
  const bool bc_boundary = side_is_boundary(side_bc);
  const bool ca_boundary = side_is_boundary(side_ca);
  check_internal(!(bc_boundary && ca_boundary), "whole-disk triangle reached removal");

  const int p = prev_b_[h], n = next_b_[h];
  alive_[t] = 0;
  --alive_count_;
  retire_side(h);

  if (!bc_boundary && !ca_boundary) {
    int e1 = d_.adjacency[t][(k + 1) % 3];  // (c -> b)
    int e2 = d_.adjacency[t][(k + 2) % 3];  // (a -> c)
    expose_side(e1);
    expose_side(e2);
    link(p, e2);
    link(e2, e1);
    link(e1, n);
    return {e2, e1};
  }
  if (bc_boundary) {
    // h and side_bc are consecutive boundary sides; head(h) leaves the disk.
    check_internal(next_b_[h] == side_bc, "boundary sides not consecutive at head");
    int n2 = next_b_[side_bc];
    int e2 = d_.adjacency[t][(k + 2) % 3];  // (a -> c)
    retire_side(side_bc);
    expose_side(e2);
    link(p, e2);
    link(e2, n2);
    return {e2, n2};
  }
  // ca_boundary: tail(h) leaves the disk.
  check_internal(prev_b_[h] == side_ca, "boundary sides not consecutive at tail");
  int p2 = prev_b_[side_ca];
  int e1 = d_.adjacency[t][(k + 1) % 3];  // (c -> b)
  retire_side(side_ca);
  expose_side(e1);
  link(p2, e1);
  link(e1, n);
  return {p2, e1};
}

UnfoldingPath DiskState::run(int s, int t, PathStats* stats) {
  PathStats local;
  PathStats& st = stats ? *stats : local;

  std::vector<int> vertices{s};
  std::vector<PathElement> elements;

  // Initial terminal handles from the disk's boundary cycle.
  auto initial_handles = [this](int v) -> std::pair<int, int> {
    const auto& bs = d_.boundary_sides;
    for (std::size_t i = 0; i < bs.size(); ++i)
      if (tail(bs[i]) == v) return {bs[(i + bs.size() - 1) % bs.size()], bs[i]};
    fail(errc::invalid_terminals, "vertex " + std::to_string(v) + " is not on the boundary");
  };
  if (s == t) fail(errc::invalid_terminals, "terminals coincide");
  auto [s_in, s_out] = initial_handles(s);
  auto [t_in, t_out] = initial_handles(t);

  std::vector<WorkItem> stack;
  stack.push_back({false, {}, -1, s, s_in, s_out, t, t_in, t_out});

  const int step_limit = 2 * d_.triangle_count() + 4;

  while (!stack.empty()) {
    st.max_stack = std::max(st.max_stack, static_cast<int>(stack.size()));
    WorkItem it = stack.back();
    stack.pop_back();
    if (it.emit) {
      emit(vertices, elements, it.elem, it.vertex);
      continue;
    }
    check_internal(st.steps() < step_limit, "step budget exceeded");

    const int cs = it.s, ct = it.t;
    const int n_in = tail(it.s_in), n_out = head(it.s_out);

    if (n_in == n_out) {
      // Two-vertex boundary cycle (both boundary edges join s to the opposite
      // terminal). Outside the paper-style case analysis: every wing touches
      // both terminals, but its apex is interior, so peeling it keeps a disk.
      ++st.forced;
      check_internal(n_in == ct, "two-vertex boundary without the opposite terminal");
      int h = it.s_out;
      int w = tri(h);
      int apex = d_.triangles[w][(h % 3 + 2) % 3];
      check_internal(boundary_count_[apex] == 0, "apex of forced wing not interior");
      auto [u_in, u_out] = remove_wing(h);
      emit(vertices, elements, PathElement::facet_node(w), apex);
      // The opposite terminal's incoming side was the removed side; rewire.
      stack.push_back({false, {}, -1, apex, u_in, u_out, ct, u_out, it.s_in});
      continue;
    }

    // Wing candidates in scan order: s-side then t-side, lower-indexed
    // boundary neighbor first within a side.
    struct Cand {
      int term;      // active terminal
      int opposite;  // other terminal
      int h;         // wing's boundary side at the active terminal
      int neighbor;  // boundary neighbor across h
      bool s_side;
    };
    Cand cands[4];
    int nc = 0;
    auto add_side = [&](int term, int opposite, int in_side, int out_side, bool s_side) {
      Cand a{term, opposite, in_side, tail(in_side), s_side};
      Cand b{term, opposite, out_side, head(out_side), s_side};
      if (b.neighbor < a.neighbor) std::swap(a, b);
      cands[nc++] = a;
      cands[nc++] = b;
    };
    add_side(cs, ct, it.s_in, it.s_out, true);
    add_side(ct, cs, it.t_in, it.t_out, false);

    auto wing_has = [&](int w, int v) {
      return d_.triangles[w][0] == v || d_.triangles[w][1] == v || d_.triangles[w][2] == v;
    };
    auto wing_breaks = [&](int h) {
      int w = tri(h), k = h % 3;
      int apex = d_.triangles[w][(k + 2) % 3];
      return boundary_count_[apex] > 0 && !side_is_boundary(3 * w + (k + 1) % 3) &&
             !side_is_boundary(3 * w + (k + 2) % 3);
    };

    int advance = -1, split = -1;
    for (int i = 0; i < nc && advance < 0; ++i)
      if (!wing_has(tri(cands[i].h), cands[i].opposite) && !wing_breaks(cands[i].h)) advance = i;
    if (advance < 0)
      for (int i = 0; i < nc && split < 0; ++i)
        if (!wing_has(tri(cands[i].h), cands[i].opposite)) split = i;

    if (advance >= 0) {
      // Case 1: a good wing. Peel it and advance the active terminal to the
      // apex; the far terminal keeps its handles.
      ++st.case1;
      const Cand& c = cands[advance];
      int w = tri(c.h);
      int apex = d_.triangles[w][(c.h % 3 + 2) % 3];
      auto [u_in, u_out] = remove_wing(c.h);
      if (c.s_side) {
        emit(vertices, elements, PathElement::facet_node(w), apex);
        stack.push_back({false, {}, -1, apex, u_in, u_out, ct, it.t_in, it.t_out});
      } else {
        stack.push_back({true, PathElement::facet_node(w), ct});
        stack.push_back({false, {}, -1, cs, it.s_in, it.s_out, apex, u_in, u_out});
      }
      continue;
    }

    if (split >= 0) {
      // Case 2: the wing breaks the disk at its apex, splitting it into the
      // component of side a (tail of h) and the component of side b (head).
      const Cand& c = cands[split];
      const int h = c.h;
      const int w = tri(h), k = h % 3;
      const int a = tail(h), b = head(h);
      const int apex = d_.triangles[w][(k + 2) % 3];
      check_internal(wing_breaks(h), "split wing does not break the disk");

      const int p = prev_b_[h], n = next_b_[h];
      const int e1 = d_.adjacency[w][(k + 1) % 3];  // (apex -> b)
      const int e2 = d_.adjacency[w][(k + 2) % 3];  // (a -> apex)

      alive_[w] = 0;
      --alive_count_;

      // Old boundary sides at the apex, in the component of a: rotating from
      // the newly exposed (a -> apex) side stays inside that sector.
      const int cw = sector_exit(e2);
      check_internal(tail(cw) == apex, "sector walk missed the apex");
      const int zc = prev_b_[cw];

      // Locate the opposite terminal: walk the b-arc forward and the a-arc
      // backward in lockstep; cost is bounded by the smaller side.
      bool opp_in_a = false, decided = false;
      for (int wb = n, wa = p; !decided;) {
        if (head(wb) == c.opposite) {
          opp_in_a = false;
          decided = true;
        } else if (wb == zc) {
          opp_in_a = true;
          decided = true;
        }
        if (decided) break;
        wb = next_b_[wb];
        if (tail(wa) == c.opposite) {
          opp_in_a = true;
          decided = true;
        } else if (wa == cw) {
          opp_in_a = false;
          decided = true;
        }
        wa = prev_b_[wa];
      }

      retire_side(h);
      expose_side(e1);
      expose_side(e2);
      link(p, e2);
      link(e2, cw);
      link(zc, e1);
      link(e1, n);

      // Terminal handles per component.
      const int a_in = p, a_out = e2;
      const int apexA_in = e2, apexA_out = cw;
      const int b_in = e1, b_out = n;
      const int apexB_in = zc, apexB_out = e1;

      check_internal(c.term == a || c.term == b, "wing side does not touch its terminal");
      const bool active_is_a = c.term == a;
      // Component holding the active terminal is D1; its neighbor s1 is on D2.
      int s1, s1_in, s1_out, act_in, act_out, u1_in, u1_out, u2_in, u2_out;
      bool opposite_in_d1;
      if (active_is_a) {
        s1 = b;
        s1_in = b_in;
        s1_out = b_out;
        act_in = a_in;
        act_out = a_out;
        u1_in = apexA_in;
        u1_out = apexA_out;
        u2_in = apexB_in;
        u2_out = apexB_out;
        opposite_in_d1 = opp_in_a;
      } else {
        s1 = a;
        s1_in = a_in;
        s1_out = a_out;
        act_in = b_in;
        act_out = b_out;
        u1_in = apexB_in;
        u1_out = apexB_out;
        u2_in = apexA_in;
        u2_out = apexA_out;
        opposite_in_d1 = !opp_in_a;
      }

      auto facet = PathElement::facet_node(w);
      if (c.s_side) {
        if (opposite_in_d1) {
          // (s, W, s1) + path(s1, D2, apex) + path(apex, D1, t)
          ++st.case2a;
          emit(vertices, elements, facet, s1);
          stack.push_back({false, {}, -1, apex, u1_in, u1_out, ct, it.t_in, it.t_out});
          stack.push_back({false, {}, -1, s1, s1_in, s1_out, apex, u2_in, u2_out});
        } else {
          // path(s, D1, apex) + (apex, W, s1) + path(s1, D2, t)
          ++st.case2b;
          stack.push_back({false, {}, -1, s1, s1_in, s1_out, ct, it.t_in, it.t_out});
          stack.push_back({true, facet, s1});
          stack.push_back({false, {}, -1, cs, act_in, act_out, apex, u1_in, u1_out});
        }
      } else {
        if (opposite_in_d1) {
          // path(s, D1, apex) + path(apex, D2, t1) + (t1, W, t)
          ++st.case2a;
          stack.push_back({true, facet, ct});
          stack.push_back({false, {}, -1, apex, u2_in, u2_out, s1, s1_in, s1_out});
          stack.push_back({false, {}, -1, cs, it.s_in, it.s_out, apex, u1_in, u1_out});
        } else {
          // path(s, D2, t1) + (t1, W, apex) + path(apex, D1, t)
          ++st.case2b;
          stack.push_back({false, {}, -1, apex, u1_in, u1_out, ct, act_in, act_out});
          stack.push_back({true, facet, apex});
          stack.push_back({false, {}, -1, cs, it.s_in, it.s_out, s1, s1_in, s1_out});
        }
      }
      continue;
    }

    // Case 3: every wing touches the opposite terminal; the component must be
    // a single triangle or the two-triangle quadrilateral with interior edge
    // joining the terminals.
    const int w1 = tri(it.s_in), w2 = tri(it.s_out);
    if (w1 == w2) {
      ++st.case3a;
      for (int k = 0; k < 3; ++k)
        check_internal(side_is_boundary(3 * w1 + k), "single-wing component is not one triangle");
      check_internal(wing_has(w1, ct), "triangle component misses the opposite terminal");
      alive_[w1] = 0;
      --alive_count_;
      for (int k = 0; k < 3; ++k) retire_side(3 * w1 + k);
      emit(vertices, elements, PathElement::facet_node(w1), ct);
    } else {
      ++st.case3b;
      auto apex_of = [&](int h) { return d_.triangles[tri(h)][(h % 3 + 2) % 3]; };
      check_internal(apex_of(it.s_in) == ct && apex_of(it.s_out) == ct,
                     "quad component wings do not meet the opposite terminal");
      // Interior diagonal (s, t): w1 holds side (s -> t), w2 holds (t -> s).
      int diag1 = -1, diag2 = -1;
      for (int k = 0; k < 3; ++k) {
        if (tail(3 * w1 + k) == cs && head(3 * w1 + k) == ct) diag1 = 3 * w1 + k;
        if (tail(3 * w2 + k) == ct && head(3 * w2 + k) == cs) diag2 = 3 * w2 + k;
      }
      check_internal(diag1 >= 0 && diag2 >= 0, "quad diagonal not found");
      check_internal(d_.adjacency[w1][diag1 % 3] == diag2, "quad triangles not glued on diagonal");
      for (int w : {w1, w2})
        for (int k = 0; k < 3; ++k)
          if (3 * w + k != diag1 && 3 * w + k != diag2)
            check_internal(side_is_boundary(3 * w + k), "quad outer side not on boundary");
      alive_[w1] = alive_[w2] = 0;
      alive_count_ -= 2;
      for (int side : {it.s_in, it.s_out, next_b_[it.s_out], prev_b_[it.s_in]}) retire_side(side);
      emit(vertices, elements, PathElement::edge_node(cs, ct), ct);
    }
  }

  check_internal(alive_count_ == 0, "facets left uncovered");
  check_internal(vertices.back() == t, "path does not end at t");

  UnfoldingPath path;
  path.vertices = std::move(vertices);
  path.elements = std::move(elements);
  path.cyclic = false;
  return path;
}

}  // namespace

std::vector<int> wings(const Disk& d, int v) {
  const auto& bs = d.boundary_sides;
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (d.side_tail(bs[i]) == v) {
      int in = bs[(i + bs.size() - 1) % bs.size()];
      int out = bs[i];
      std::vector<int> result{in / 3};
      if (out / 3 != in / 3) result.push_back(out / 3);
      std::sort(result.begin(), result.end());
      return result;
    }
  fail(errc::invalid_terminals, "vertex not on the disk boundary");
}

bool breaks_disk(const Disk& d, int t) {
  int boundary_slots = 0, wing_slot = -1;
  for (int k = 0; k < 3; ++k)
    if (d.side_is_boundary(3 * t + k)) {
      ++boundary_slots;
      wing_slot = k;
    }
  check_internal(boundary_slots > 0, "triangle is not a wing");
  if (boundary_slots >= 2) return false;  // peeling keeps a disk (or empties it)
  int apex = d.triangles[t][(wing_slot + 2) % 3];
  return d.is_boundary_vertex(apex);
}

UnfoldingPath unfolding_path(const Disk& d, int s, int t, PathStats* stats) {
  if (s == t || s < 0 || t < 0 || s >= d.vertex_count || t >= d.vertex_count)
    fail(errc::invalid_terminals, "terminals must be two distinct disk vertices");
  if (!d.is_boundary_vertex(s) || !d.is_boundary_vertex(t))
    fail(errc::invalid_terminals, "terminals must lie on the disk boundary");
  DiskState state(d);
  return state.run(s, t, stats);
}

std::optional<FacetPath> brute_force_facet_path(const LatticeGraph& g, int max_facets) {
  const int nf = g.facet_count();
  if (nf > max_facets || nf > 31)
    fail(errc::too_large, "facet count " + std::to_string(nf) + " above search bound " +
                              std::to_string(std::min(max_facets, 31)));
  if (nf == 0) return std::nullopt;

  const std::uint32_t full = (1u << nf) - 1;
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> cur_v, cur_f;

  auto key_of = [&](int v, std::uint32_t mask) {
    return static_cast<std::uint64_t>(mask) * static_cast<std::uint64_t>(g.vertex_count) +
           static_cast<std::uint64_t>(v);
  };

  std::function<bool(int, std::uint32_t)> dfs = [&](int v, std::uint32_t mask) -> bool {
    if (mask == full) return true;
    if (dead.count(key_of(v, mask))) return false;
    for (int f : g.vertex_facets[v]) {
      if (mask & (1u << f)) continue;
      for (int w : g.facet_vertices[f]) {
        if (w == v) continue;
        cur_f.push_back(f);
        cur_v.push_back(w);
        if (dfs(w, mask | (1u << f))) return true;
        cur_f.pop_back();
        cur_v.pop_back();
      }
    }
    dead.insert(key_of(v, mask));
    return false;
  };

  for (int start = 0; start < g.vertex_count; ++start) {
    cur_v.assign(1, start);
    cur_f.clear();
    if (dfs(start, 0)) {
      FacetPath p;
      p.vertices = cur_v;
      for (int f : cur_f) p.elements.push_back(PathElement::facet_node(f));
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace unfold
