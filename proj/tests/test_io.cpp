#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shapes.hpp"
#include "unfold/error.hpp"
#include "unfold/facet_cycle.hpp"
#include "unfold/io.hpp"
#include "unfold/layout.hpp"
#include "unfold/run.hpp"
#include "unfold/surgery.hpp"
#include "unfold/verify.hpp"

using namespace unfold;

namespace {

const char* kTetraOff =
    "OFF\n"
    "4 4 6\n"
    "1 1 1\n"
    "1 -1 -1\n"
    "-1 1 -1\n"
    "-1 -1 1\n"
    "3 0 1 2\n"
    "3 0 2 3\n"
    "3 0 3 1\n"
    "3 1 3 2\n";

errc parse_code(const std::string& bytes, MeshFormat fmt) {
  try {
    parse_mesh_file(bytes, fmt);
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal;
}

std::string write_temp(const std::string& name, const std::string& bytes) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  return path.string();
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("OFF parsing") {
  Mesh m = parse_mesh_file(kTetraOff, MeshFormat::off);
  CHECK(m.vertex_count() == 4);
  CHECK(m.triangle_count() == 4);

  CHECK(parse_code("NOFF\n4 4 6\n", MeshFormat::off) == errc::parse_error);
  CHECK(parse_code("OFF\n4 4\n", MeshFormat::off) == errc::parse_error);

  // Octagon face: rejected as nonsimplicial by the mesh builder.
  std::string octa_face =
      "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n8 0 1 2 0 1 2 0 1\n";
  CHECK(parse_code(octa_face, MeshFormat::off) == errc::non_simplicial_face);
}

TEST_CASE("OBJ parsing") {
  std::string obj =
      "# comment\n"
      "v 1 1 1\n"
      "v 1 -1 -1\n"
      "v -1 1 -1\n"
      "v -1 -1 1\n"
      "vn 0 0 1\n"
      "f 1//1 2//1 3//1\n"
      "f 1/1 3/1 4/1\n"
      "f 1 4 2\n"
      "f 2 4 3\n";
  Mesh m = parse_mesh_file(obj, MeshFormat::obj);
  CHECK(m.vertex_count() == 4);
  CHECK(m.triangle_count() == 4);

  CHECK(parse_code("v 0 0 0\nf 0 1 2\n", MeshFormat::obj) == errc::parse_error);
  CHECK(parse_code("v 0 0 0\nf -1 -2 -3\n", MeshFormat::obj) == errc::parse_error);
}

TEST_CASE("SVG element counts") {
  Mesh m = shapes::cube();
  FacetCycle c = facet_cycle(m);
  Layout l = layout_path(c, m);
  std::string svg = emit_svg(l);
  CHECK(count_occurrences(svg, "<polygon") == 12);
  CHECK(count_occurrences(svg, "<line") == 13);
  CHECK(count_occurrences(svg, "#666666") == 0);  // no quad strips in a cycle

  // A path with one edge node shades exactly two triangles.
  Mesh tet = shapes::tetrahedron();
  Disk d = cut_to_disk(tet);
  auto [s, t] = pick_terminals(d);
  UnfoldingPath p = unfolding_path(d, s, t);
  if (p.quad_count() == 1) {
    Layout lp = layout_path(p, d, tet);
    std::string svg2 = emit_svg(lp);
    CHECK(count_occurrences(svg2, "#666666") == 2);
  }
}

TEST_CASE("JSON round trip reproduces the report") {
  Mesh m = shapes::cube();
  FacetCycle c = facet_cycle(m);
  Layout l = layout_path(c, m);
  Report rep = check_layout(l, m);
  std::string json = emit_json("cycle", m, c, &l, rep);

  ResultDoc doc = parse_result_json(json);
  CHECK(doc.mode == "cycle");
  CHECK(doc.mesh.triangle_count() == 12);
  REQUIRE(doc.layout.has_value());

  Report rep2 = check_layout(*doc.layout, doc.mesh);
  CHECK(rep2.pass == rep.pass);
  Report seq2 = check_path(LatticeGraph::from_mesh(doc.mesh), doc.sequence, true);
  CHECK(seq2.pass);
}

TEST_CASE("emit_json is deterministic") {
  Mesh m = shapes::tetrahedron();
  Disk d = cut_to_disk(m);
  auto [s, t] = pick_terminals(d);
  UnfoldingPath p = unfolding_path(d, s, t);
  Layout l = layout_path(p, d, m);
  Report rep = check_layout(l, m);
  NodeSequence seq = sequence_to_mesh_ids(p, d);
  CHECK(emit_json("path", m, seq, &l, rep) == emit_json("path", m, seq, &l, rep));
}

TEST_CASE("run path mode end to end") {
  std::string in = write_temp("unfold_test_tetra.off", kTetraOff);
  std::string svg = (std::filesystem::temp_directory_path() / "unfold_test_out.svg").string();
  std::string json = (std::filesystem::temp_directory_path() / "unfold_test_out.json").string();

  RunConfig cfg;
  cfg.mode = RunMode::path;
  cfg.input = in;
  cfg.out_svg = svg;
  cfg.out_json = json;
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 0);
  CHECK(std::filesystem::exists(svg));
  CHECK(std::filesystem::exists(json));
  CHECK(out.str().find("verification PASS") != std::string::npos);

  // Re-verify the emitted JSON through verify mode.
  RunConfig vcfg;
  vcfg.mode = RunMode::verify;
  vcfg.input = json;
  std::ostringstream vout, verr;
  CHECK(run(vcfg, vout, verr) == 0);

  std::filesystem::remove(in);
  std::filesystem::remove(svg);
  std::filesystem::remove(json);
}

TEST_CASE("run cycle mode rejects a torus with exit 2") {
  Mesh torus = shapes::torus();
  std::ostringstream off;
  off << "OFF\n" << torus.vertex_count() << " " << torus.triangle_count() << " 0\n";
  for (const auto& v : torus.vertices()) off << v.x << " " << v.y << " " << v.z << "\n";
  for (const auto& t : torus.triangles()) off << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  std::string in = write_temp("unfold_test_torus.off", off.str());

  RunConfig cfg;
  cfg.mode = RunMode::cycle;
  cfg.input = in;
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 2);
  CHECK(err.str().find("GenusNotZero") != std::string::npos);
  std::filesystem::remove(in);
}

TEST_CASE("experiment mode is deterministic") {
  RunConfig cfg;
  cfg.mode = RunMode::experiment;
  cfg.instances = 3;
  cfg.seed = 7;
  std::ostringstream out1, err1, out2, err2;
  CHECK(run(cfg, out1, err1) == 0);
  CHECK(run(cfg, out2, err2) == 0);
  CHECK(out1.str() == out2.str());
  CHECK(out1.str().find("FAIL") == std::string::npos);
}
