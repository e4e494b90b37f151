#pragma once
#include <stdexcept>
#include <string>

namespace unfold {

// Error categories surfaced by the library. The CLI maps input-side errors
// to exit code 2 and verification/internal failures to exit code 1.
enum class errc {
  non_simplicial_face,
  non_manifold_edge,
  inconsistent_orientation,
  degenerate_triangle,
  duplicate_triangle,
  index_out_of_range,
  disconnected_surface,
  invalid_topology,
  genus_not_zero,
  not_contractible,
  too_large,
  invalid_terminals,
  degenerate_hinge,
  parse_error,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Internal consistency checks. These guard algorithm invariants, not user input.
inline void check_internal(bool ok, const char* what) {
  if (!ok) throw Error(errc::internal, what);
}

}  // namespace unfold
