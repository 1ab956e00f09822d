#pragma once

#include <optional>
#include <span>
#include <vector>

#include "krasno/geometry.hpp"

namespace krasno {

/// Closed half-plane { p : <normal, p> <= offset }.
struct HalfPlane {
  Rational nx, ny, offset;

  bool contains(const Point2& p) const { return nx * p.x + ny * p.y <= offset; }
  /// Inner (left) half-plane of the directed edge a -> b.
  static HalfPlane left_of(const Point2& a, const Point2& b);
};

/// Convex polygon with counter-clockwise, strictly convex vertices. One or two
/// vertices encode a degenerate point or segment.
struct ConvexPolygon {
  std::vector<Point2> vertices;

  bool degenerate() const { return vertices.size() < 3; }
  Rational area() const;
  bool contains(const Point2& p) const;  // closed
  Region to_region() const;              // empty for degenerate input
  std::vector<HalfPlane> halfplanes() const;
};

/// Throws EmptyInput for an empty point set.
ConvexPolygon convex_hull(std::span<const Point2> points);

/// nullopt when the polygons are disjoint.
std::optional<ConvexPolygon> convex_intersect(const ConvexPolygon& a, const ConvexPolygon& b);

/// nullopt when the clipped set is empty.
std::optional<ConvexPolygon> clip_convex(const ConvexPolygon& c, const HalfPlane& h);

struct HalfPlaneResult {
  enum class Kind { Empty, Unbounded, Bounded } kind = Kind::Empty;
  ConvexPolygon polygon;
};

/// Exact intersection of half-planes. `bounds`, when given, must contain the
/// intersection if it is bounded (it is only used as an initial clip box).
HalfPlaneResult halfplane_intersect(std::span<const HalfPlane> hs, const std::optional<BBox>& bounds = std::nullopt);

ConvexPolygon minkowski_sum_convex(const ConvexPolygon& a, const ConvexPolygon& b);

/// max over the polygon of <p, u>.
Rational support(const ConvexPolygon& c, const Point2& u);

ConvexPolygon box_polygon(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1);

}  // namespace krasno
