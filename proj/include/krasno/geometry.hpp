#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krasno/error.hpp"
#include "krasno/rational.hpp"

namespace krasno {

struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point2(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  // Lexicographic (x, then y).
  friend bool operator<(const Point2& a, const Point2& b) {
    const int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
  }

  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(const Rational& s, const Point2& a) { return {s * a.x, s * a.y}; }
  Point2 operator-() const { return {-x, -y}; }
};

/// Parses "x,y" with each coordinate in parse_rational syntax.
Point2 parse_point(std::string_view text);
std::string format_point(const Point2& p);

inline Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

/// Sign of (q - p) x (r - p).
int orient(const Point2& p, const Point2& q, const Point2& r);

/// True when r lies on the closed segment [p, q].
bool on_segment(const Point2& p, const Point2& q, const Point2& r);

/// Counter-clockwise perpendicular.
inline Point2 perp(const Point2& d) { return {-d.y, d.x}; }

/// d / (|d.x| + |d.y|); a rational stand-in for unit normalisation.
Point2 l1_normalized(const Point2& d);

/// Compare directions by angle in [0, 2pi) measured counter-clockwise from `ref`.
/// Returns true when `a` comes strictly before `b`.
bool angle_less_from(const Point2& ref, const Point2& a, const Point2& b);

/// Same direction (parallel and pointing the same way); both nonzero.
bool same_direction(const Point2& a, const Point2& b);

struct Segment2 {
  Point2 a;
  Point2 b;

  bool degenerate() const { return a == b; }
  friend bool operator==(const Segment2&, const Segment2&) = default;
};

/// Intersection of two closed segments: nothing, a single point, or a
/// collinear overlap segment (returned with a <= b lexicographically).
struct SegmentIntersection {
  enum class Kind { None, Point, Overlap } kind = Kind::None;
  Point2 p;
  Point2 q;
};
SegmentIntersection intersect_segments(const Segment2& s, const Segment2& t);

struct BBox {
  Rational xmin, ymin, xmax, ymax;
};

using Ring = std::vector<Point2>;

/// Twice the signed shoelace area of a closed ring.
Rational signed_area2(std::span<const Point2> ring);

/// Removes repeated consecutive vertices and vertices in the middle of straight
/// runs. Spikes (reversals) are kept.
Ring drop_collinear(const Ring& ring);

/// Rotates a ring to start at its lexicographically smallest vertex.
Ring canonical_rotation(Ring ring);

struct SimplePolygon {
  Ring vertices;  // counter-clockwise

  /// Validates the simple-polygon invariants (>= 3 vertices, no repeated
  /// consecutive vertex, no self-intersection, positive area); reorients a
  /// clockwise input. Throws InvalidPolygon.
  static SimplePolygon make(Ring vertices);

  Rational area() const;
  std::size_t size() const { return vertices.size(); }
};

/// Exact self-intersection test for a closed ring (adjacent edges may share
/// their common vertex only).
bool is_simple_ring(std::span<const Point2> ring);

struct PolygonWithHoles {
  Ring outer;               // counter-clockwise
  std::vector<Ring> holes;  // clockwise

  Rational area() const;
};

enum class Location { Outside, Boundary, Inside };

/// A finite union of interior-disjoint polygons with holes. Components may touch
/// at boundary points. Values produced by region_boolean are canonical.
struct Region {
  std::vector<PolygonWithHoles> components;

  static Region from_simple(const SimplePolygon& p);
  static Region from_polygon(PolygonWithHoles p);

  bool empty() const { return components.empty(); }
  Rational area() const;
  BBox bbox() const;
  std::vector<std::pair<Point2, Point2>> directed_edges() const;
  std::vector<Point2> vertices() const;
  std::size_t edge_count() const;
};

Rational area(const Region& r);

/// Closed point location.
Location locate(const Region& r, const Point2& p);

/// Multiplies every coordinate by s > 0.
Region scale_region(const Region& r, const Rational& s);
Region scale_region(const Region& r, double s);

Region translate_region(const Region& r, const Point2& offset);

BBox bbox_of(std::span<const Point2> pts);

}  // namespace krasno
