#pragma once

#include <vector>

#include "krasno/geometry.hpp"

namespace krasno {

/// Finite union of closed segments.
struct SkeletalGallery {
  std::vector<Segment2> segments;

  bool contains(const Point2& p) const;
  std::vector<Point2> endpoints() const;  // sorted, unique
};

/// A compact gallery: a polygonal region or a skeletal union of segments.
struct Gallery {
  enum class Kind { Polygonal, Skeletal };

  Kind kind = Kind::Polygonal;
  Region region;
  SkeletalGallery skeleton;

  static Gallery polygonal(Region r);
  static Gallery polygonal(const SimplePolygon& p) { return polygonal(Region::from_simple(p)); }
  static Gallery skeletal(std::vector<Segment2> segments);

  bool is_polygonal() const { return kind == Kind::Polygonal; }
  bool contains(const Point2& p) const;
  /// No holes, components touching in a tree pattern (polygonal); a tree of
  /// segments (skeletal).
  bool simply_connected() const;
  std::vector<Point2> vertices() const;
  BBox bbox() const;
};

}  // namespace krasno
