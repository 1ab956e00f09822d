#pragma once

#include <cmath>

#include "krasno/geometry.hpp"

namespace krasno::detail {

struct DP {
  double x = 0, y = 0;
};

inline DP to_dp(const Point2& p) { return {p.x.get_d(), p.y.get_d()}; }

// Double-precision orientation with a conservative forward error bound.
// Returns 2 when the sign cannot be certified.
inline int orient_double(DP a, DP b, DP c) {
  const double ux = b.x - a.x, uy = b.y - a.y;
  const double vx = c.x - a.x, vy = c.y - a.y;
  const double l = ux * vy, r = uy * vx;
  const double det = l - r;
  const double mag = std::fabs(a.x) + std::fabs(a.y) + std::fabs(b.x) + std::fabs(b.y) +
                     std::fabs(c.x) + std::fabs(c.y);
  const double err =
      1e-14 * (std::fabs(l) + std::fabs(r) + mag * (std::fabs(ux) + std::fabs(uy) + std::fabs(vx) + std::fabs(vy))) +
      1e-300;
  if (det > err) return 1;
  if (det < -err) return -1;
  return 2;
}

inline int orient_exact(const Point2& a, const Point2& b, const Point2& c) {
  return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

inline int orient_f(const Point2& a, const Point2& b, const Point2& c, DP da, DP db, DP dc) {
  const int s = orient_double(da, db, dc);
  return s != 2 ? s : orient_exact(a, b, c);
}

// sign(cross(u, v)) for direction vectors given by differences.
inline int cross_sign_double(double ux, double uy, double vx, double vy, double mag) {
  const double l = ux * vy, r = uy * vx;
  const double det = l - r;
  const double err = 1e-14 * (std::fabs(l) + std::fabs(r) + mag * (std::fabs(ux) + std::fabs(uy) + std::fabs(vx) + std::fabs(vy))) + 1e-300;
  if (det > err) return 1;
  if (det < -err) return -1;
  return 2;
}

// sign(a - b) using cached doubles first.
inline int cmp_f(const Rational& a, const Rational& b, double da, double db) {
  const double d = da - db;
  const double err = 1e-15 * (std::fabs(da) + std::fabs(db)) + 1e-300;
  if (d > err) return 1;
  if (d < -err) return -1;
  return cmp(a, b) > 0 ? 1 : (cmp(a, b) < 0 ? -1 : 0);
}

}  // namespace krasno::detail
