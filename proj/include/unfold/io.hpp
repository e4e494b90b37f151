#pragma once
#include <optional>
#include <string>

#include "unfold/layout.hpp"
#include "unfold/mesh.hpp"
#include "unfold/path.hpp"
#include "unfold/verify.hpp"

namespace unfold {

enum class MeshFormat { off, obj };

// OFF: header, counts, vertex lines, face lines with leading arity.
// OBJ: v/f records with 1-based indices; normals, textures, groups ignored.
// Parse failures carry the line number; face validation errors come from
// build_mesh (an arity other than 3 surfaces as NonSimplicialFace).
Mesh parse_mesh_file(const std::string& bytes, MeshFormat format);

// One polygon per placed triangle (two-triangle strips shaded 40% gray, the
// rest unfilled), one line per strip boundary, view box 2% beyond the layout.
std::string emit_svg(const Layout& l, double stroke_width = 0);

// Self-contained result document: mesh (points, triangles, counts, genus),
// the node sequence at mesh level, strips, placed triangles, connection
// points, the verification report, and the quad count.
std::string emit_json(const std::string& mode, const Mesh& m, const NodeSequence& mesh_seq,
                      const Layout* layout, const Report& report);

// Round-trip of emit_json for the verify mode.
struct ResultDoc {
  Mesh mesh;
  NodeSequence sequence;
  std::optional<Layout> layout;
  std::string mode;
};
ResultDoc parse_result_json(const std::string& bytes);

// Maps a disk-level sequence onto mesh ids through the disk's origin maps.
NodeSequence sequence_to_mesh_ids(const NodeSequence& p, const Disk& d);

}  // namespace unfold
