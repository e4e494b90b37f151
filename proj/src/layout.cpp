#include "unfold/layout.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "unfold/error.hpp"

namespace unfold {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  while (a > kPi) a -= 2 * kPi;
  while (a <= -kPi) a += 2 * kPi;
  return a;
}

// Angular midpoint of {d : d.n > 0 for every n}, or nullopt when empty.
std::optional<double> feasible_direction(const std::vector<Vec2>& normals) {
  double base = std::atan2(normals[0].y, normals[0].x);
  double lo = -kPi / 2, hi = kPi / 2;
  for (const auto& n : normals) {
    double psi = wrap_angle(std::atan2(n.y, n.x) - base);
    lo = std::max(lo, psi - kPi / 2);
    hi = std::min(hi, psi + kPi / 2);
  }
  if (!(lo < hi)) return std::nullopt;
  return base + (lo + hi) / 2;
}

int index_of(const std::array<int, 3>& ids, int v) {
  for (int i = 0; i < 3; ++i)
    if (ids[i] == v) return i;
  return -1;
}

// Flattens a triangle given entry/exit/third corner distances: entry at the
// origin, exit on the +x axis, third above or below per requested chirality.
struct FlatTriangle {
  Vec2 entry, exit, third;
};

FlatTriangle flatten(const Vec3& p_in, const Vec3& p_out, const Vec3& p_third, bool third_up) {
  double base = distance(p_in, p_out);
  double din = distance(p_in, p_third);
  double dout = distance(p_out, p_third);
  check_internal(base > 0 && din > 0 && dout > 0, "flatten on a collapsed triangle");
  double cx = (din * din + base * base - dout * dout) / (2 * base);
  double cy2 = din * din - cx * cx;
  double cy = std::sqrt(std::max(0.0, cy2));
  if (!third_up) cy = -cy;
  return {{0, 0}, {base, 0}, {cx, cy}};
}

// True when (v_in, v_out, third) is an even permutation of the corner order,
// i.e. the flattened triangle keeps its surface orientation with third above
// the entry-exit axis.
bool even_orientation(const std::array<int, 3>& ids, int v_in, int v_out) {
  int i = index_of(ids, v_in), o = index_of(ids, v_out);
  check_internal(i >= 0 && o >= 0, "path vertex not a corner of its facet");
  return (i + 1) % 3 == o;
}

PlacedTriangle assemble(const std::array<int, 3>& ids, int i_in, int i_out, const Vec2& pin,
                        const Vec2& pout, const Vec2& pthird) {
  PlacedTriangle out;
  out.corner_vertices = ids;
  int i_third = 3 - i_in - i_out;
  out.points[i_in] = pin;
  out.points[i_out] = pout;
  out.points[i_third] = pthird;
  return out;
}

double area2(const Vec3& a, const Vec3& b, const Vec3& c) { return triangle_area2_3d(a, b, c); }

void require_nondegenerate(const std::array<Vec3, 3>& c) {
  double longest2 = std::max({norm2(c[1] - c[0]), norm2(c[2] - c[1]), norm2(c[0] - c[2])});
  if (area2(c[0], c[1], c[2]) * 0.5 <= 1e-12 * longest2)
    fail(errc::degenerate_triangle, "cannot place a degenerate triangle");
}

// --- hinged quad placement ------------------------------------------------

struct QuadFrame {
  // Flattened rigid quad in the hinge-local frame: entry y at the origin,
  // exit z on the +x axis, f_a's apex above, f_b's apex below.
  double base;           // |yz|
  Vec2 pa, qb;           // apexes of f_a (above) and f_b (below)
  double theta_ya, theta_yb, theta_za, theta_zb;  // triangle angles at y and z
};

struct HingedPose {
  Vec2 za, pa, zb, qb;  // y stays at the origin
  double phi;           // strip direction to rotate onto +x
  bool exit_is_b;
};

// Positions of the four moving corners once f_b is rotated by delta about y.
void hinged_corners(const QuadFrame& f, double delta, Vec2& za, Vec2& pa, Vec2& zb, Vec2& qb) {
  za = {f.base, 0};
  pa = f.pa;
  zb = rotate(Vec2{f.base, 0}, -delta);
  qb = rotate(f.qb, -delta);
}

std::optional<HingedPose> hinged_feasible(const QuadFrame& f, double delta) {
  Vec2 za, pa, zb, qb;
  hinged_corners(f, delta, za, pa, zb, qb);
  for (bool exit_b : {true, false}) {
    Vec2 ex = exit_b ? zb : za;
    std::vector<Vec2> normals{pa, za, qb, zb, ex - pa, ex - qb, exit_b ? ex - za : ex - zb};
    if (auto phi = feasible_direction(normals))
      return HingedPose{za, pa, zb, qb, *phi, exit_b};
  }
  return std::nullopt;
}

// Independent per-triangle placement with provably disjoint cones; used when
// the minimal-rotation search cannot hold its margin.
HingedPose hinged_fallback(const QuadFrame& f) {
  double theta_pa = kPi - f.theta_ya - f.theta_za;
  double theta_qb = kPi - f.theta_yb - f.theta_zb;
  double rho_a = (f.theta_za - f.theta_ya) / 2;
  double rho_b = (f.theta_yb - f.theta_zb) / 2;
  double ra = std::sqrt(norm2(f.pa));
  double rb = std::sqrt(norm2(f.qb));
  double eta = std::min(theta_pa, theta_qb) / 8;
  for (int attempt = 0; attempt < 64; ++attempt, eta /= 2) {
    HingedPose pose;
    pose.za = rotate(Vec2{f.base, 0}, rho_a + eta);
    pose.pa = Vec2{ra * std::cos(rho_a + eta + f.theta_ya), ra * std::sin(rho_a + eta + f.theta_ya)};
    pose.zb = rotate(Vec2{f.base, 0}, rho_b + eta);
    pose.qb = Vec2{rb * std::cos(rho_b + eta - f.theta_yb), rb * std::sin(rho_b + eta - f.theta_yb)};
    pose.phi = 0;
    pose.exit_is_b = pose.zb.x > pose.za.x;
    Vec2 ex = pose.exit_is_b ? pose.zb : pose.za;
    Vec2 other = pose.exit_is_b ? pose.za : pose.zb;
    bool ok = pose.za.x > 0 && pose.zb.x > 0 && pose.pa.x > 0 && pose.qb.x > 0 &&
              pose.pa.x < pose.za.x && pose.qb.x < pose.zb.x && ex.x > other.x &&
              ex.x > pose.pa.x && ex.x > pose.qb.x;
    if (ok) return pose;
  }
  fail(errc::internal, "hinged fallback failed to separate the quad");
}

}  // namespace

PlacedTriangle place_triangle(const std::array<Vec3, 3>& corners,
                              const std::array<int, 3>& corner_ids, int v_in, int v_out,
                              Vec2 anchor) {
  if (v_in == v_out) fail(errc::invalid_terminals, "entry and exit corners coincide");
  require_nondegenerate(corners);
  int i_in = index_of(corner_ids, v_in), i_out = index_of(corner_ids, v_out);
  if (i_in < 0 || i_out < 0) fail(errc::invalid_terminals, "corner id not in triangle");
  int i_third = 3 - i_in - i_out;

  FlatTriangle flat = flatten(corners[i_in], corners[i_out], corners[i_third],
                              even_orientation(corner_ids, v_in, v_out));
  auto phi = feasible_direction({flat.third - flat.entry, flat.exit - flat.third});
  check_internal(phi.has_value(), "no feasible strip direction for a triangle");

  Vec2 pin = anchor;
  Vec2 pout = rotate(flat.exit, -*phi) + anchor;
  Vec2 pthird = rotate(flat.third, -*phi) + anchor;
  check_internal(pin.x < pthird.x && pthird.x < pout.x, "triangle not strictly monotone");
  return assemble(corner_ids, i_in, i_out, pin, pout, pthird);
}

QuadPlacement place_quad(const std::array<Vec3, 3>& f1_corners, const std::array<int, 3>& f1_ids,
                         const std::array<Vec3, 3>& f2_corners, const std::array<int, 3>& f2_ids,
                         int v_in, int v_out, Vec2 anchor) {
  require_nondegenerate(f1_corners);
  require_nondegenerate(f2_corners);

  // f_a traverses the shared edge as (v_in -> v_out), f_b the other way.
  bool f1_is_a = even_orientation(f1_ids, v_in, v_out);
  const auto& a_ids = f1_is_a ? f1_ids : f2_ids;
  const auto& a_corners = f1_is_a ? f1_corners : f2_corners;
  const auto& b_ids = f1_is_a ? f2_ids : f1_ids;
  const auto& b_corners = f1_is_a ? f2_corners : f1_corners;
  check_internal(!even_orientation(b_ids, v_in, v_out), "triangles traverse the edge equally");

  int a_in = index_of(a_ids, v_in), a_out = index_of(a_ids, v_out);
  int b_in = index_of(b_ids, v_in), b_out = index_of(b_ids, v_out);
  check_internal(a_in >= 0 && a_out >= 0 && b_in >= 0 && b_out >= 0, "edge not shared");
  int a_third = 3 - a_in - a_out, b_third = 3 - b_in - b_out;

  QuadFrame frame;
  FlatTriangle fa = flatten(a_corners[a_in], a_corners[a_out], a_corners[a_third], true);
  FlatTriangle fb = flatten(b_corners[b_in], b_corners[b_out], b_corners[b_third], false);
  frame.base = fa.exit.x;
  frame.pa = fa.third;
  frame.qb = fb.third;
  frame.theta_ya = std::atan2(fa.third.y, fa.third.x);
  frame.theta_yb = std::atan2(-fb.third.y, fb.third.x);
  frame.theta_za = std::atan2(fa.third.y, frame.base - fa.third.x);
  frame.theta_zb = std::atan2(-fb.third.y, frame.base - fb.third.x);
  check_internal(frame.theta_ya > 0 && frame.theta_yb > 0 && frame.theta_za > 0 &&
                     frame.theta_zb > 0,
                 "flattened quad has a collapsed corner");

  double theta_y = frame.theta_ya + frame.theta_yb;
  double theta_z = frame.theta_za + frame.theta_zb;
  if (theta_y >= kPi && theta_z >= kPi)
    fail(errc::degenerate_hinge, "both endpoint angles reflex after flattening");

  auto finish = [&](const Vec2& ya, const Vec2& za, const Vec2& pa, const Vec2& yb,
                    const Vec2& zb, const Vec2& qb, const Vec2& exit, bool hinged) {
    QuadPlacement out;
    PlacedTriangle ta = assemble(a_ids, a_in, a_out, ya, za, pa);
    PlacedTriangle tb = assemble(b_ids, b_in, b_out, yb, zb, qb);
    out.first = f1_is_a ? ta : tb;
    out.second = f1_is_a ? tb : ta;
    out.exit = exit;
    out.hinged = hinged;
    return out;
  };

  if (theta_y < kPi && theta_z < kPi) {
    // Convex: rigid placement, shared edge intact. A direction normal to the
    // apex diagonal always works, so the arc is nonempty.
    std::vector<Vec2> normals{frame.pa, frame.qb, Vec2{frame.base, 0},
                              Vec2{frame.base, 0} - frame.pa, Vec2{frame.base, 0} - frame.qb};
    auto phi = feasible_direction(normals);
    check_internal(phi.has_value(), "no strip direction for a convex quad");
    Vec2 y = anchor;
    Vec2 z = rotate(Vec2{frame.base, 0}, -*phi) + anchor;
    Vec2 p = rotate(frame.pa, -*phi) + anchor;
    Vec2 q = rotate(frame.qb, -*phi) + anchor;
    check_internal(y.x < p.x && y.x < q.x && p.x < z.x && q.x < z.x, "convex quad not monotone");
    return finish(y, z, p, y, z, q, z, false);
  }

  // Hinged: open the shared edge at its convex-angle endpoint. The placement
  // is computed with the hinge at the entry; a reflex entry angle is handled
  // by posing the reversed quad and rotating the result half a turn.
  const bool hinge_at_entry = theta_z >= kPi;
  QuadFrame hf = frame;
  if (!hinge_at_entry) {
    // Reverse the quad: entry and exit swap, f_a and f_b swap sides.
    hf.theta_ya = frame.theta_zb;
    hf.theta_yb = frame.theta_za;
    hf.theta_za = frame.theta_yb;
    hf.theta_zb = frame.theta_ya;
    FlatTriangle ra = flatten(b_corners[b_out], b_corners[b_in], b_corners[b_third], true);
    FlatTriangle rb = flatten(a_corners[a_out], a_corners[a_in], a_corners[a_third], false);
    hf.pa = ra.third;
    hf.qb = rb.third;
  }

  double theta_y_h = hf.theta_ya + hf.theta_yb;
  double delta_max = 2 * kPi - theta_y_h;
  std::optional<double> first_ok;
  const int kGrid = 720;
  for (int k = 1; k <= kGrid && !first_ok; ++k) {
    double delta = delta_max * k / (kGrid + 1);
    if (hinged_feasible(hf, delta)) first_ok = delta;
  }

  HingedPose pose;
  if (first_ok) {
    double lo = *first_ok - delta_max / (kGrid + 1);
    double hi = *first_ok;
    for (int i = 0; i < 80; ++i) {
      double mid = (lo + hi) / 2;
      if (hinged_feasible(hf, mid))
        hi = mid;
      else
        lo = mid;
    }
    // Minimal opening plus a separation margin relative to the quad size.
    double diam = 0;
    {
      Vec2 za, pa, zb, qb;
      hinged_corners(hf, hi, za, pa, zb, qb);
      for (const Vec2& c : {za, pa, zb, qb}) diam = std::max(diam, std::sqrt(norm2(c)));
      diam = std::max(diam, distance(pa, qb));
    }
    double margin = 1e-6 * diam / hf.base;
    double delta = std::min(hi + margin, delta_max * (1 - 1e-9));
    if (auto p = hinged_feasible(hf, delta))
      pose = *p;
    else if (auto p2 = hinged_feasible(hf, hi))
      pose = *p2;
    else
      pose = hinged_fallback(hf);
  } else {
    pose = hinged_fallback(hf);
  }

  Vec2 ya = rotate(Vec2{0, 0}, -pose.phi);
  Vec2 za = rotate(pose.za, -pose.phi);
  Vec2 pa = rotate(pose.pa, -pose.phi);
  Vec2 zb = rotate(pose.zb, -pose.phi);
  Vec2 qb = rotate(pose.qb, -pose.phi);
  Vec2 ex = pose.exit_is_b ? zb : za;

  check_internal(ya.x < std::min({za.x, pa.x, zb.x, qb.x}), "hinge entry not strictly leftmost");
  check_internal(ex.x > pa.x && ex.x > qb.x && ex.x > (pose.exit_is_b ? za.x : zb.x),
                 "hinge exit not strictly rightmost");

  if (hinge_at_entry) {
    Vec2 o = anchor;
    return finish(o, za + o, pa + o, o, zb + o, qb + o, ex + o, true);
  }

  // Hinge at the exit: the pose above describes the reversed quad (reversed
  // f_a is the original f_b). Rotate it half a turn so minima become maxima,
  // then put the leftmost entry image on the anchor. The map sends the chosen
  // reversed exit to the anchor bitwise, which the connection chain relies on.
  auto shift = [&](Vec2 v) { return anchor + (ex - v); };
  Vec2 z_image = shift(ya);             // the hinge point, true exit
  Vec2 fa_entry = shift(zb);            // original f_a's y image (reversed f_b)
  Vec2 fa_apex = shift(qb);
  Vec2 fb_entry = shift(za);            // original f_b's y image (reversed f_a)
  Vec2 fb_apex = shift(pa);
  return finish(fa_entry, z_image, fa_apex, fb_entry, z_image, fb_apex, z_image, true);
}

namespace {

struct ElementGeometry {
  int count = 1;
  std::array<Vec3, 3> c1{}, c2{};
  std::array<int, 3> ids1{}, ids2{};      // sequence-space corner ids
  std::array<int, 3> mesh_ids1{}, mesh_ids2{};
  int src1 = -1, src2 = -1;
};

Layout layout_elements(const NodeSequence& p,
                       const std::function<ElementGeometry(const PathElement&)>& geom,
                       const std::function<int(int)>& to_mesh_vertex) {
  check_internal(p.vertices.size() == p.elements.size() + 1, "sequence shape");
  check_internal(!p.elements.empty(), "empty sequence");

  Layout out;
  Vec2 anchor{0, 0};
  out.connections.push_back({anchor, to_mesh_vertex(p.vertices.front())});

  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    int vin = p.vertices[k], vout = p.vertices[k + 1];
    ElementGeometry g = geom(p.elements[k]);
    Strip strip;
    strip.left = anchor.x;
    strip.first_triangle = static_cast<int>(out.triangles.size());
    strip.triangle_count = g.count;
    Vec2 exit;
    if (g.count == 1) {
      PlacedTriangle t = place_triangle(g.c1, g.ids1, vin, vout, anchor);
      exit = t.points[index_of(g.ids1, vout)];
      t.source_triangle = g.src1;
      t.corner_vertices = g.mesh_ids1;
      t.strip = static_cast<int>(out.strips.size());
      out.triangles.push_back(t);
    } else {
      QuadPlacement q = place_quad(g.c1, g.ids1, g.c2, g.ids2, vin, vout, anchor);
      exit = q.exit;
      q.first.source_triangle = g.src1;
      q.first.corner_vertices = g.mesh_ids1;
      q.second.source_triangle = g.src2;
      q.second.corner_vertices = g.mesh_ids2;
      q.first.strip = q.second.strip = static_cast<int>(out.strips.size());
      out.triangles.push_back(q.first);
      out.triangles.push_back(q.second);
    }
    check_internal(exit.x > strip.left, "empty strip");
    strip.right = exit.x;
    out.strips.push_back(strip);
    out.connections.push_back({exit, to_mesh_vertex(vout)});
    anchor = exit;
  }
  return out;
}

}  // namespace

Layout layout_path(const NodeSequence& p, const Disk& d, const Mesh& m) {
  // Interior edge -> one of its sides, built once when the path has quads.
  std::vector<std::pair<std::array<int, 2>, int>> edge_side;
  bool has_edges = false;
  for (const auto& e : p.elements) has_edges = has_edges || e.kind == ElementKind::edge;
  if (has_edges) {
    edge_side.reserve(3 * d.triangle_count() / 2);
    for (int t = 0; t < d.triangle_count(); ++t)
      for (int k = 0; k < 3; ++k)
        if (d.adjacent(t, k) > 3 * t + k) {
          int a = d.side_tail(3 * t + k), b = d.side_head(3 * t + k);
          edge_side.push_back({{std::min(a, b), std::max(a, b)}, 3 * t + k});
        }
    std::sort(edge_side.begin(), edge_side.end());
  }

  auto geom = [&](const PathElement& e) {
    ElementGeometry g;
    auto fill = [&](int disk_tri, std::array<Vec3, 3>& c, std::array<int, 3>& ids,
                    std::array<int, 3>& mids, int& src) {
      src = d.triangle_origin[disk_tri];
      ids = d.triangles[disk_tri];
      for (int i = 0; i < 3; ++i) {
        mids[i] = d.vertex_origin[ids[i]];
        c[i] = m.vertices()[mids[i]];
      }
    };
    if (e.kind == ElementKind::facet) {
      g.count = 1;
      fill(e.facet, g.c1, g.ids1, g.mesh_ids1, g.src1);
      return g;
    }
    auto it = std::lower_bound(edge_side.begin(), edge_side.end(), e.edge,
                               [](const auto& entry, const auto& k) { return entry.first < k; });
    check_internal(it != edge_side.end() && it->first == e.edge,
                   "edge node is not an interior disk edge");
    int side = it->second;
    g.count = 2;
    fill(side / 3, g.c1, g.ids1, g.mesh_ids1, g.src1);
    fill(d.adjacent(side / 3, side % 3) / 3, g.c2, g.ids2, g.mesh_ids2, g.src2);
    return g;
  };
  auto to_mesh = [&](int v) { return d.vertex_origin[v]; };
  return layout_elements(p, geom, to_mesh);
}

Layout layout_path(const NodeSequence& p, const Mesh& m) {
  auto geom = [&](const PathElement& e) {
    ElementGeometry g;
    auto fill = [&](int tri, std::array<Vec3, 3>& c, std::array<int, 3>& ids,
                    std::array<int, 3>& mids, int& src) {
      src = tri;
      ids = m.triangles()[tri];
      mids = ids;
      for (int i = 0; i < 3; ++i) c[i] = m.vertices()[ids[i]];
    };
    if (e.kind == ElementKind::facet) {
      g.count = 1;
      fill(e.facet, g.c1, g.ids1, g.mesh_ids1, g.src1);
      return g;
    }
    int eid = m.edge_index(e.edge[0], e.edge[1]);
    check_internal(eid >= 0, "edge node is not a mesh edge");
    g.count = 2;
    fill(m.edges()[eid].triangles[0], g.c1, g.ids1, g.mesh_ids1, g.src1);
    fill(m.edges()[eid].triangles[1], g.c2, g.ids2, g.mesh_ids2, g.src2);
    return g;
  };
  auto to_mesh = [&](int v) { return v; };
  return layout_elements(p, geom, to_mesh);
}

}  // namespace unfold
