#pragma once
#include <cstdint>
#include <vector>

#include "unfold/mesh.hpp"

namespace unfold {

// Seeded points distributed uniformly on the unit sphere with a 1e-9
// general-position jitter. Fully specified generation (no library
// distributions), so streams are stable across platforms.
std::vector<Vec3> random_sphere_points(int n, std::uint64_t seed);

// Incremental convex hull with conflict lists and exact orientation tests.
// Requires at least four affinely independent points; the result is a valid
// genus-zero simplicial mesh over the hull vertices.
Mesh convex_hull(const std::vector<Vec3>& points);

inline Mesh random_hull(int n, std::uint64_t seed) {
  return convex_hull(random_sphere_points(n, seed));
}

}  // namespace unfold
