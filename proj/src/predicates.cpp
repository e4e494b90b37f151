#include "unfold/geom.hpp"

#include <cmath>
#include <cstdlib>

// Sign-exact orientation tests. A cheap floating-point filter handles the
// overwhelmingly common well-conditioned case; when the determinant magnitude
// falls under the rounding-error bound, the sign is recomputed with
// nonoverlapping floating-point expansions (error-free transformations), which
// yields the exact sign of the exact determinant of the given doubles.

namespace unfold {
namespace {

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kO3dErrBound = (7.0 + 56.0 * kEps) * kEps;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bvirt = x - a;
  double avirt = x - bvirt;
  double bround = b - bvirt;
  double around = a - avirt;
  y = around + bround;
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  double bvirt = a - x;
  double avirt = x + bvirt;
  double bround = bvirt - b;
  double around = a - avirt;
  y = around + bround;
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

// A nonoverlapping expansion, components in nondecreasing magnitude order.
// Capacity covers the worst case of the exact orient3d path.
struct Expansion {
  double c[224];
  int n = 0;

  // Grow-expansion: adds one scalar, keeping the invariant exactly.
  void add(double b) {
    double q = b;
    for (int i = 0; i < n; ++i) {
      double qn, h;
      two_sum(q, c[i], qn, h);
      c[i] = h;
      q = qn;
    }
    c[n++] = q;
  }

  void add_product(double a, double b) {
    double p, e;
    two_product(a, b, p, e);
    if (e != 0.0) add(e);
    if (p != 0.0) add(p);
  }

  int sign() const {
    for (int i = n - 1; i >= 0; --i) {
      if (c[i] > 0.0) return 1;
      if (c[i] < 0.0) return -1;
    }
    return 0;
  }
};

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

int orient2d_exact(const Vec2& a, const Vec2& b, const Vec2& c) {
  // det = ax by - ax cy - cx by - ay bx + ay cx + cy bx (the cx cy terms cancel
  // symbolically, so every remaining monomial is an exact two_product).
  Expansion e;
  e.add_product(a.x, b.y);
  e.add_product(-a.x, c.y);
  e.add_product(-c.x, b.y);
  e.add_product(-a.y, b.x);
  e.add_product(a.y, c.x);
  e.add_product(c.y, b.x);
  return e.sign();
}

// Product of two length-2 expansions, accumulated into out with a sign.
void accumulate_product22(double ah, double al, double bh, double bl, double s, Expansion& out) {
  out.add_product(s * ah, bh);
  out.add_product(s * ah, bl);
  out.add_product(s * al, bh);
  out.add_product(s * al, bl);
}

int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  // Differences relative to a are exact as (hi, lo) pairs; the 3x3 determinant
  // is then a sum of products of three such pairs.
  double abx[2], aby[2], abz[2], acx[2], acy[2], acz[2], adx[2], ady[2], adz[2];
  two_diff(b.x, a.x, abx[0], abx[1]);
  two_diff(b.y, a.y, aby[0], aby[1]);
  two_diff(b.z, a.z, abz[0], abz[1]);
  two_diff(c.x, a.x, acx[0], acx[1]);
  two_diff(c.y, a.y, acy[0], acy[1]);
  two_diff(c.z, a.z, acz[0], acz[1]);
  two_diff(d.x, a.x, adx[0], adx[1]);
  two_diff(d.y, a.y, ady[0], ady[1]);
  two_diff(d.z, a.z, adz[0], adz[1]);

  Expansion det;
  auto add_term = [&det](const double u[2], const double v[2], const double w[2], double s) {
    // s * u * (v x-component product w): u * v * w accumulated termwise.
    Expansion vw;
    accumulate_product22(v[0], v[1], w[0], w[1], 1.0, vw);
    for (int i = 0; i < vw.n; ++i) {
      det.add_product(s * u[0], vw.c[i]);
      det.add_product(s * u[1], vw.c[i]);
    }
  };

  // ab . (ac x ad)
  add_term(abx, acy, adz, 1.0);
  add_term(abx, acz, ady, -1.0);
  add_term(aby, acz, adx, 1.0);
  add_term(aby, acx, adz, -1.0);
  add_term(abz, acx, ady, 1.0);
  add_term(abz, acy, adx, -1.0);
  return det.sign();
}

}  // namespace

int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
  double detleft = (a.x - c.x) * (b.y - c.y);
  double detright = (a.y - c.y) * (b.x - c.x);
  double det = detleft - detright;
  double detsum;

  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    return sign_of(det);
  }

  if (std::abs(det) >= kCcwErrBound * detsum) return sign_of(det);
  return orient2d_exact(a, b, c);
}

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  double abx = b.x - a.x, aby = b.y - a.y, abz = b.z - a.z;
  double acx = c.x - a.x, acy = c.y - a.y, acz = c.z - a.z;
  double adx = d.x - a.x, ady = d.y - a.y, adz = d.z - a.z;

  double m1 = acy * adz, m2 = acz * ady;
  double m3 = acz * adx, m4 = acx * adz;
  double m5 = acx * ady, m6 = acy * adx;

  double det = abx * (m1 - m2) + aby * (m3 - m4) + abz * (m5 - m6);
  double permanent = (std::abs(m1) + std::abs(m2)) * std::abs(abx) +
                     (std::abs(m3) + std::abs(m4)) * std::abs(aby) +
                     (std::abs(m5) + std::abs(m6)) * std::abs(abz);

  if (std::abs(det) >= kO3dErrBound * permanent) return sign_of(det);
  return orient3d_exact(a, b, c, d);
}

}  // namespace unfold
