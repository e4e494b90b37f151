#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>

namespace unfold {

enum class RunMode { path, cycle, verify, experiment };

struct RunConfig {
  RunMode mode = RunMode::path;
  std::string input;      // mesh file (path, cycle) or result JSON (verify)
  std::string out_svg;    // optional
  std::string out_json;   // optional
  int instances = 10;     // experiment
  std::uint64_t seed = 1;  // experiment
  double svg_stroke = 0;  // 0 = auto
};

// Exit code 0: all verifications pass; 1: a verification failed;
// 2: input could not be parsed or violates a precondition.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace unfold
