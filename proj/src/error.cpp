#include "unfold/error.hpp"

namespace unfold {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_simplicial_face: return "NonSimplicialFace";
    case errc::non_manifold_edge: return "NonManifoldEdge";
    case errc::inconsistent_orientation: return "InconsistentOrientation";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::duplicate_triangle: return "DuplicateTriangle";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::disconnected_surface: return "DisconnectedSurface";
    case errc::invalid_topology: return "InvalidTopology";
    case errc::genus_not_zero: return "GenusNotZero";
    case errc::not_contractible: return "NotContractible";
    case errc::too_large: return "TooLarge";
    case errc::invalid_terminals: return "InvalidTerminals";
    case errc::degenerate_hinge: return "DegenerateHinge";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace unfold
