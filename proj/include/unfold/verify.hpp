#pragma once
#include <string>
#include <vector>

#include "unfold/layout.hpp"
#include "unfold/mesh.hpp"
#include "unfold/path.hpp"

namespace unfold {

struct Violation {
  std::string rule;
  std::vector<int> elements;
  std::string detail;
};

struct Report {
  bool pass = true;
  std::vector<Violation> violations;

  void flag(const std::string& rule, std::vector<int> elements, const std::string& detail) {
    pass = false;
    violations.push_back({rule, std::move(elements), detail});
  }
};

// Rule ids emitted by the checkers.
namespace rules {
inline constexpr const char* kAlternation = "alternation";
inline constexpr const char* kRepeatedVertex = "repeated-vertex";
inline constexpr const char* kNonIncident = "non-incident";
inline constexpr const char* kUncoveredFacet = "uncovered-facet";
inline constexpr const char* kDuplicateFacet = "duplicate-facet";
inline constexpr const char* kEdgeNodeInvalid = "edge-node-invalid";
inline constexpr const char* kNotClosed = "not-closed";
inline constexpr const char* kEdgeNodeInCycle = "edge-node-in-cycle";
inline constexpr const char* kIsometry = "isometry";
inline constexpr const char* kOverlap = "overlap";
inline constexpr const char* kDisconnected = "disconnected";
inline constexpr const char* kStripContainment = "strip-containment";
inline constexpr const char* kStripOrder = "strip-order";
inline constexpr const char* kConnectionMismatch = "connection-mismatch";
}  // namespace rules

// Validates a path or cycle against the incidence structure: alternation,
// flank incidence and distinctness, exact-once facet coverage (an edge node
// covers its two incident facets), and for cyclic sequences closure plus the
// absence of edge nodes.
Report check_path(const LatticeGraph& g, const NodeSequence& p, bool cyclic);
Report check_path(const Disk& d, const NodeSequence& p, bool cyclic);

// Exact relation of two placed triangles under orientation predicates.
enum class TriRelation { disjoint, touch, overlap };
TriRelation classify_triangles(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b);

struct LayoutCheckOptions {
  // Above this triangle count, pairwise tests are restricted to same-strip and
  // adjacent-strip pairs (strip containment makes other pairs disjoint).
  int exhaustive_limit = 1500;
  bool force_exhaustive = false;
};

// Verifies isometry against the source mesh (relative 1e-9 per edge), strip
// structure and containment, pairwise interior disjointness, contact-graph
// connectivity, and the connection chain.
Report check_layout(const Layout& l, const Mesh& m, const LayoutCheckOptions& opts = {});

}  // namespace unfold
