#include "unfold/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "unfold/error.hpp"

namespace unfold {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

struct LineReader {
  std::istringstream in;
  int line_no = 0;
  explicit LineReader(const std::string& bytes) : in(bytes) {}

  // Next non-empty, non-comment line.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return line;
    }
    return std::nullopt;
  }
};

Mesh parse_off(const std::string& bytes) {
  LineReader rd(bytes);
  auto header = rd.next();
  if (!header) parse_fail(rd.line_no, "empty OFF file");
  {
    std::istringstream hs(*header);
    std::string tag;
    hs >> tag;
    if (tag != "OFF") parse_fail(rd.line_no, "expected OFF header, got '" + tag + "'");
  }
  auto counts = rd.next();
  if (!counts) parse_fail(rd.line_no, "missing counts line");
  long nv, nf, ne;
  {
    std::istringstream cs(*counts);
    if (!(cs >> nv >> nf >> ne)) parse_fail(rd.line_no, "counts line needs V F E");
    if (nv < 0 || nf < 0) parse_fail(rd.line_no, "negative counts");
  }
  std::vector<Vec3> points;
  points.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    auto line = rd.next();
    if (!line) parse_fail(rd.line_no, "expected " + std::to_string(nv) + " vertices");
    std::istringstream vs(*line);
    Vec3 p;
    if (!(vs >> p.x >> p.y >> p.z)) parse_fail(rd.line_no, "vertex needs 3 coordinates");
    points.push_back(p);
  }
  std::vector<std::vector<int>> faces;
  faces.reserve(nf);
  for (long i = 0; i < nf; ++i) {
    auto line = rd.next();
    if (!line) parse_fail(rd.line_no, "expected " + std::to_string(nf) + " faces");
    std::istringstream fs(*line);
    long arity;
    if (!(fs >> arity) || arity < 1) parse_fail(rd.line_no, "face needs a leading arity");
    std::vector<int> face;
    for (long k = 0; k < arity; ++k) {
      long idx;
      if (!(fs >> idx)) parse_fail(rd.line_no, "face shorter than its arity");
      face.push_back(static_cast<int>(idx));
    }
    faces.push_back(std::move(face));
  }
  return build_mesh(points, faces);
}

Mesh parse_obj(const std::string& bytes) {
  LineReader rd(bytes);
  std::vector<Vec3> points;
  std::vector<std::vector<int>> faces;
  for (auto line = rd.next(); line; line = rd.next()) {
    std::istringstream ls(*line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vec3 p;
      if (!(ls >> p.x >> p.y >> p.z)) parse_fail(rd.line_no, "vertex needs 3 coordinates");
      points.push_back(p);
    } else if (tag == "f") {
      std::vector<int> face;
      std::string token;
      while (ls >> token) {
        // "7", "7/1", "7//3", "7/1/3": the vertex index is the first field.
        std::string head = token.substr(0, token.find('/'));
        long idx;
        try {
          idx = std::stol(head);
        } catch (...) {
          parse_fail(rd.line_no, "bad face index '" + token + "'");
        }
        if (idx == 0) parse_fail(rd.line_no, "face indices are 1-based");
        if (idx < 0) parse_fail(rd.line_no, "negative (relative) indices unsupported");
        face.push_back(static_cast<int>(idx - 1));
      }
      if (face.empty()) parse_fail(rd.line_no, "empty face record");
      faces.push_back(std::move(face));
    }
    // v, f only; everything else (vn, vt, o, g, s, mtllib, ...) is skipped.
  }
  return build_mesh(points, faces);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json sequence_json(const NodeSequence& s) {
  json nodes = json::array();
  nodes.push_back({{"type", "vertex"}, {"id", s.vertices[0]}});
  for (std::size_t k = 0; k < s.elements.size(); ++k) {
    const PathElement& e = s.elements[k];
    if (e.kind == ElementKind::facet)
      nodes.push_back({{"type", "facet"}, {"id", e.facet}});
    else
      nodes.push_back({{"type", "edge"}, {"vertices", {e.edge[0], e.edge[1]}}});
    nodes.push_back({{"type", "vertex"}, {"id", s.vertices[k + 1]}});
  }
  return json{{"cyclic", s.cyclic}, {"nodes", std::move(nodes)}};
}

}  // namespace

Mesh parse_mesh_file(const std::string& bytes, MeshFormat format) {
  return format == MeshFormat::off ? parse_off(bytes) : parse_obj(bytes);
}

std::string emit_svg(const Layout& l, double stroke_width) {
  check_internal(!l.strips.empty() && !l.triangles.empty(), "svg export needs a layout");

  // Flip y so the layout reads the usual way up.
  double min_x = l.strips.front().left, max_x = l.strips.back().right;
  double min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& t : l.triangles)
    for (const auto& p : t.points) {
      double y = -p.y;
      if (first) {
        min_y = max_y = y;
        first = false;
      }
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  double w = max_x - min_x, h = max_y - min_y;
  if (h <= 0) h = 1;
  double margin = 0.02 * std::max(w, h);
  if (stroke_width <= 0) stroke_width = 0.002 * std::max(w, h);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x - margin) << " "
      << fmt(min_y - margin) << " " << fmt(w + 2 * margin) << " " << fmt(h + 2 * margin)
      << "\">\n";

  // Strip boundaries.
  std::vector<double> bounds;
  for (const auto& s : l.strips) bounds.push_back(s.left);
  bounds.push_back(l.strips.back().right);
  for (double x : bounds)
    out << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(min_y - margin) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(max_y + margin) << "\" stroke=\"#bbbbbb\" stroke-width=\""
        << fmt(stroke_width * 0.5) << "\"/>\n";

  for (const auto& t : l.triangles) {
    bool shaded = l.strips[t.strip].triangle_count == 2;
    out << "  <polygon points=\"";
    for (int k = 0; k < 3; ++k) {
      if (k) out << " ";
      out << fmt(t.points[k].x) << "," << fmt(-t.points[k].y);
    }
    out << "\" fill=\"" << (shaded ? "#666666" : "none") << "\" stroke=\"black\" stroke-width=\""
        << fmt(stroke_width) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string emit_json(const std::string& mode, const Mesh& m, const NodeSequence& mesh_seq,
                      const Layout* layout, const Report& report) {
  json doc;
  doc["mode"] = mode;

  json verts = json::array();
  for (const auto& v : m.vertices()) verts.push_back({v.x, v.y, v.z});
  json tris = json::array();
  for (const auto& t : m.triangles()) tris.push_back({t[0], t[1], t[2]});
  doc["mesh"] = {{"vertices", std::move(verts)},
                 {"triangles", std::move(tris)},
                 {"counts",
                  {{"vertices", m.vertex_count()},
                   {"edges", m.edge_count()},
                   {"triangles", m.triangle_count()},
                   {"genus", genus(m)}}}};

  doc["sequence"] = sequence_json(mesh_seq);
  doc["quad_count"] = mesh_seq.quad_count();

  if (layout) {
    json strips = json::array();
    for (const auto& s : layout->strips)
      strips.push_back({{"left", s.left}, {"right", s.right}, {"triangles", s.triangle_count}});
    json placed = json::array();
    for (const auto& t : layout->triangles) {
      json pts = json::array();
      for (const auto& p : t.points) pts.push_back({p.x, p.y});
      placed.push_back({{"triangle", t.source_triangle},
                        {"strip", t.strip},
                        {"vertices", {t.corner_vertices[0], t.corner_vertices[1],
                                      t.corner_vertices[2]}},
                        {"points", std::move(pts)}});
    }
    json conns = json::array();
    for (const auto& c : layout->connections)
      conns.push_back({{"point", {c.point.x, c.point.y}}, {"vertex", c.mesh_vertex}});
    doc["layout"] = {{"strips", std::move(strips)},
                     {"triangles", std::move(placed)},
                     {"connections", std::move(conns)}};
  }

  json viol = json::array();
  for (const auto& v : report.violations)
    viol.push_back({{"rule", v.rule}, {"elements", v.elements}, {"detail", v.detail}});
  doc["report"] = {{"pass", report.pass}, {"violations", std::move(viol)}};

  return doc.dump(2) + "\n";
}

ResultDoc parse_result_json(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  try {
    ResultDoc out;
    out.mode = doc.value("mode", "");

    std::vector<Vec3> points;
    for (const auto& v : doc.at("mesh").at("vertices"))
      points.push_back({v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()});
    std::vector<std::vector<int>> faces;
    for (const auto& t : doc.at("mesh").at("triangles"))
      faces.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    out.mesh = build_mesh(points, faces);

    const auto& seq = doc.at("sequence");
    out.sequence.cyclic = seq.at("cyclic").get<bool>();
    bool expect_vertex = true;
    for (const auto& node : seq.at("nodes")) {
      std::string type = node.at("type").get<std::string>();
      if (type == "vertex") {
        if (!expect_vertex) fail(errc::parse_error, "two vertex nodes in a row");
        out.sequence.vertices.push_back(node.at("id").get<int>());
      } else if (type == "facet") {
        if (expect_vertex) fail(errc::parse_error, "facet node where a vertex was expected");
        out.sequence.elements.push_back(PathElement::facet_node(node.at("id").get<int>()));
      } else if (type == "edge") {
        if (expect_vertex) fail(errc::parse_error, "edge node where a vertex was expected");
        out.sequence.elements.push_back(
            PathElement::edge_node(node.at("vertices").at(0).get<int>(),
                                   node.at("vertices").at(1).get<int>()));
      } else {
        fail(errc::parse_error, "unknown node type '" + type + "'");
      }
      expect_vertex = !expect_vertex;
    }
    if (out.sequence.vertices.size() != out.sequence.elements.size() + 1)
      fail(errc::parse_error, "sequence does not alternate");

    if (doc.contains("layout")) {
      Layout l;
      for (const auto& s : doc.at("layout").at("strips")) {
        Strip strip;
        strip.left = s.at("left").get<double>();
        strip.right = s.at("right").get<double>();
        strip.triangle_count = s.at("triangles").get<int>();
        l.strips.push_back(strip);
      }
      for (const auto& t : doc.at("layout").at("triangles")) {
        PlacedTriangle pt;
        pt.source_triangle = t.at("triangle").get<int>();
        pt.strip = t.at("strip").get<int>();
        for (int k = 0; k < 3; ++k) {
          pt.corner_vertices[k] = t.at("vertices").at(k).get<int>();
          pt.points[k] = {t.at("points").at(k).at(0).get<double>(),
                          t.at("points").at(k).at(1).get<double>()};
        }
        l.triangles.push_back(pt);
      }
      for (const auto& c : doc.at("layout").at("connections"))
        l.connections.push_back(
            {{c.at("point").at(0).get<double>(), c.at("point").at(1).get<double>()},
             c.at("vertex").get<int>()});
      // Rebuild strip membership from the placed triangles.
      int next = 0;
      for (std::size_t s = 0; s < l.strips.size(); ++s) {
        l.strips[s].first_triangle = next;
        next += l.strips[s].triangle_count;
      }
      if (next != static_cast<int>(l.triangles.size()))
        fail(errc::parse_error, "strip triangle counts do not match the placed triangles");
      out.layout = std::move(l);
    }
    return out;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("result document malformed: ") + e.what());
  }
}

NodeSequence sequence_to_mesh_ids(const NodeSequence& p, const Disk& d) {
  NodeSequence out;
  out.cyclic = p.cyclic;
  for (int v : p.vertices) out.vertices.push_back(d.vertex_origin[v]);
  for (const auto& e : p.elements) {
    if (e.kind == ElementKind::facet)
      out.elements.push_back(PathElement::facet_node(d.triangle_origin[e.facet]));
    else
      out.elements.push_back(
          PathElement::edge_node(d.vertex_origin[e.edge[0]], d.vertex_origin[e.edge[1]]));
  }
  return out;
}

}  // namespace unfold
