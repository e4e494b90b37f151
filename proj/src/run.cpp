#include "unfold/run.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "unfold/error.hpp"
#include "unfold/facet_cycle.hpp"
#include "unfold/hull.hpp"
#include "unfold/io.hpp"
#include "unfold/layout.hpp"
#include "unfold/path.hpp"
#include "unfold/surgery.hpp"
#include "unfold/verify.hpp"

namespace unfold {

namespace {

// Results stay deterministic: per-level cover validation is enabled only up
// to this size (it snapshots the complex per contraction).
constexpr int kDeepCheckLimit = 1200;

struct PipelineResult {
  NodeSequence mesh_sequence;
  Layout layout;
  Report path_report;
  Report layout_report;

  bool pass() const { return path_report.pass && layout_report.pass; }
};

PipelineResult run_path_pipeline(const Mesh& m) {
  PipelineResult r;
  Disk d = cut_to_disk(m);
  auto [s, t] = pick_terminals(d);
  UnfoldingPath p = unfolding_path(d, s, t);
  r.path_report = check_path(d, p, false);
  r.layout = layout_path(p, d, m);
  r.layout_report = check_layout(r.layout, m);
  r.mesh_sequence = sequence_to_mesh_ids(p, d);
  return r;
}

PipelineResult run_cycle_pipeline(const Mesh& m) {
  PipelineResult r;
  FacetCycle c = facet_cycle(m, m.triangle_count() <= kDeepCheckLimit);
  r.path_report = check_path(LatticeGraph::from_mesh(m), c, true);
  r.layout = layout_path(c, m);
  r.layout_report = check_layout(r.layout, m);
  r.mesh_sequence = c;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  out << bytes;
}

MeshFormat format_of(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  for (auto& c : ext) c = static_cast<char>(std::tolower(c));
  if (ext == "off") return MeshFormat::off;
  if (ext == "obj") return MeshFormat::obj;
  fail(errc::parse_error, "unknown mesh extension '" + ext + "' (expected .off or .obj)");
}

Report merged(const Report& a, const Report& b) {
  Report r;
  r.pass = a.pass && b.pass;
  r.violations = a.violations;
  r.violations.insert(r.violations.end(), b.violations.begin(), b.violations.end());
  return r;
}

int run_single(const RunConfig& cfg, std::ostream& out) {
  Mesh m = parse_mesh_file(read_file(cfg.input), format_of(cfg.input));
  PipelineResult res =
      cfg.mode == RunMode::path ? run_path_pipeline(m) : run_cycle_pipeline(m);
  Report rep = merged(res.path_report, res.layout_report);

  if (!cfg.out_svg.empty()) write_file(cfg.out_svg, emit_svg(res.layout, cfg.svg_stroke));
  if (!cfg.out_json.empty())
    write_file(cfg.out_json, emit_json(cfg.mode == RunMode::path ? "path" : "cycle", m,
                                       res.mesh_sequence, &res.layout, rep));

  out << "vertices " << m.vertex_count() << "  edges " << m.edge_count() << "  triangles "
      << m.triangle_count() << "  genus " << genus(m) << "\n";
  out << "strips " << res.layout.strips.size() << "  quads " << res.mesh_sequence.quad_count()
      << "\n";
  out << "verification " << (rep.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& v : rep.violations)
    out << "  violation [" << v.rule << "] " << v.detail << "\n";
  return rep.pass ? 0 : 1;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  ResultDoc doc = parse_result_json(read_file(cfg.input));
  Report path_rep =
      check_path(LatticeGraph::from_mesh(doc.mesh), doc.sequence, doc.sequence.cyclic);
  Report layout_rep;
  if (doc.layout)
    layout_rep = check_layout(*doc.layout, doc.mesh);
  Report rep = merged(path_rep, layout_rep);
  out << "sequence " << (path_rep.pass ? "PASS" : "FAIL") << "\n";
  if (doc.layout) out << "layout " << (layout_rep.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& v : rep.violations)
    out << "  violation [" << v.rule << "] " << v.detail << "\n";
  return rep.pass ? 0 : 1;
}

int run_experiment(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  bool all_pass = true;
  double total_ms = 0;
  out << "instance points triangles quads path cycle\n";
  for (int i = 0; i < cfg.instances; ++i) {
    std::uint64_t seed = cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i);
    // 10..500 input points, matching the experiment regime.
    int points = 10 + static_cast<int>(seed % 491);
    Mesh m = random_hull(points, seed);

    auto t0 = clock::now();
    PipelineResult path_res = run_path_pipeline(m);
    PipelineResult cycle_res = run_cycle_pipeline(m);
    total_ms += std::chrono::duration<double, std::milli>(clock::now() - t0).count();

    bool path_ok = path_res.pass();
    bool cycle_ok = cycle_res.pass() && cycle_res.mesh_sequence.quad_count() == 0;
    all_pass = all_pass && path_ok && cycle_ok;
    out << i << " " << points << " " << m.triangle_count() << " "
        << path_res.mesh_sequence.quad_count() << " " << (path_ok ? "ok" : "FAIL") << " "
        << (cycle_ok ? "ok" : "FAIL") << "\n";
  }
  err << "experiment wall time " << std::fixed << std::setprecision(1) << total_ms << " ms\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.mode) {
      case RunMode::path:
      case RunMode::cycle:
        if (cfg.input.empty()) fail(errc::parse_error, "--in is required for this mode");
        return run_single(cfg, out);
      case RunMode::verify:
        if (cfg.input.empty()) fail(errc::parse_error, "--in is required for this mode");
        return run_verify(cfg, out);
      case RunMode::experiment:
        return run_experiment(cfg, out, err);
    }
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::internal ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace unfold
