#pragma once
#include <array>
#include <cmath>

namespace unfold {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

struct Vec2 {
  double x = 0, y = 0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Vec2& a) { return dot(a, a); }
inline double norm(const Vec2& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }
inline Vec2 rotate(const Vec2& v, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Exact orientation predicates (floating-point filter with an exact
// expansion-arithmetic fallback). The returned value is the sign only.
//
// orient2d: sign of det[b-a; c-a]; +1 when (a,b,c) turn counterclockwise.
int orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

// orient3d: sign of (b-a) . ((c-a) x (d-a)); +1 when d lies on the side of
// plane (a,b,c) pointed to by the right-handed normal of the ccw triangle.
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Twice the area of a 3D triangle (norm of the edge cross product).
inline double triangle_area2_3d(const Vec3& a, const Vec3& b, const Vec3& c) {
  return norm(cross(b - a, c - a));
}

}  // namespace unfold
