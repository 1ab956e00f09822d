#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "krasno/geometry.hpp"

namespace tu {

using krasno::Point2;
using krasno::Rational;
using krasno::Region;
using krasno::Ring;

inline Rational q(const char* s) { return krasno::parse_rational(s); }
inline Point2 P(const char* x, const char* y) { return {q(x), q(y)}; }
inline Point2 P(int x, int y) { return {long(x), long(y)}; }

inline Ring rect_ring(Rational x0, Rational y0, Rational x1, Rational y1) {
  return {Point2{x0, y0}, Point2{x1, y0}, Point2{x1, y1}, Point2{x0, y1}};
}
inline Region rect(Rational x0, Rational y0, Rational x1, Rational y1) {
  return Region{{krasno::PolygonWithHoles{rect_ring(x0, y0, x1, y1), {}}}};
}
inline Region ring_region(Ring r) { return Region{{krasno::PolygonWithHoles{std::move(r), {}}}}; }

inline Ring l_shape_ring() { return {P(0, 0), P(2, 0), P(2, 1), P(1, 1), P(1, 2), P(0, 2)}; }
inline Region l_shape() { return ring_region(l_shape_ring()); }

// Even-odd point membership in doubles, used only as an independent oracle.
struct RasterRegion {
  std::vector<std::array<double, 4>> edges;
  explicit RasterRegion(const Region& r) {
    for (const auto& [a, b] : r.directed_edges())
      edges.push_back({a.x.get_d(), a.y.get_d(), b.x.get_d(), b.y.get_d()});
  }
  bool inside(double x, double y) const {
    bool in = false;
    for (const auto& e : edges) {
      if ((e[1] > y) != (e[3] > y)) {
        const double xc = e[0] + (y - e[1]) * (e[2] - e[0]) / (e[3] - e[1]);
        if (x < xc) in = !in;
      }
    }
    return in;
  }
};

inline double perimeter(const Region& r) {
  double s = 0;
  for (const auto& [a, b] : r.directed_edges()) s += std::hypot(Rational(b.x - a.x).get_d(), Rational(b.y - a.y).get_d());
  return s;
}

}  // namespace tu
