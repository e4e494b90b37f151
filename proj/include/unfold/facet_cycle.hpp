#pragma once
#include <array>
#include <utility>
#include <vector>

#include "unfold/mesh.hpp"
#include "unfold/path.hpp"

namespace unfold {

// Everything needed to undo one edge contraction when lifting a facet cycle:
// the contracted edge (x merged into y), the ccw link of x at contraction
// time (link[0] == y), the star triangle ids aligned with it
// (star_triangles[i] spans link[i], link[i+1]), and the two triangles the
// contraction destroyed. Triangles outside the star keep their ids; the maps
// are filled only by the Mesh-level contract_edge, which compacts ids.
struct ContractionRecord {
  int removed_vertex = -1;  // x
  int kept_vertex = -1;     // y
  std::vector<int> link;
  std::vector<int> star_triangles;
  std::array<int, 2> destroyed{-1, -1};
  std::vector<int> vertex_map;    // P vertex -> Q vertex, -1 for x (empty = identity)
  std::vector<int> triangle_map;  // P triangle -> Q triangle, -1 if destroyed (empty = identity)
};

// Subgraph of the lattice graph spanned by vertex-facet incidences in which
// every present facet has exactly two (distinct) flanking vertices. A facet
// cycle is an Eulerian tour of this graph once every vertex degree is even.
struct EvenCoverGraph {
  std::vector<std::array<int, 2>> facet_ends;  // {-1,-1} when the facet is absent
  std::vector<int> vertex_degree;

  static EvenCoverGraph empty(int facet_count, int vertex_count) {
    EvenCoverGraph c;
    c.facet_ends.assign(facet_count, {-1, -1});
    c.vertex_degree.assign(vertex_count, 0);
    return c;
  }

  bool has(int f) const { return facet_ends[f][0] >= 0; }
  void assign(int f, int u, int v);
  void unassign(int f);
};

// Checks the even-cover invariants against an explicit complex: every alive
// facet carries two distinct incident flanks, every vertex degree is even,
// and the nonzero-degree subgraph plus all alive facets is connected.
void validate_even_cover(const EvenCoverGraph& c,
                         const std::vector<std::array<int, 3>>& facet_corners,
                         const std::vector<char>& facet_alive);

// An edge (x, y) whose endpoints have exactly two common neighbors, with x a
// minimum-degree vertex (deg <= 6 at genus zero). Requires V > 4.
std::array<int, 2> select_contractible_edge(const Mesh& m);

// Contracts x = e[0] into y = e[1]; returns the contracted mesh (compacted
// ids, coordinates of y kept for the merged vertex) and the record.
std::pair<Mesh, ContractionRecord> contract_edge(const Mesh& m, std::array<int, 2> e);

// The facet cycle of the tetrahedron's lattice graph as an even cover.
EvenCoverGraph base_k4_cycle(const Mesh& m);

// Transfers a cover from the contracted complex back to the uncontracted one:
// drops assignments inside the link, then augments each star triangle from
// the parity of its link vertex.
EvenCoverGraph lift_cycle(const EvenCoverGraph& cq, const ContractionRecord& rec);

// Eulerian tour extraction (Hierholzer) over the facets-as-edges multigraph.
FacetCycle eulerian_facet_cycle(const EvenCoverGraph& c);

// Full genus-zero pipeline: contract to K4 along low-degree vertices, take the
// base cycle, lift through the contractions in reverse, extract the tour.
// With deep_checks the cover invariants are re-validated at every level
// against a snapshot of the complex (memory quadratic in F; for tests and
// small runs).
FacetCycle facet_cycle(const Mesh& m, bool deep_checks = false);

}  // namespace unfold
