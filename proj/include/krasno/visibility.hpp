#pragma once

#include <optional>
#include <span>
#include <vector>

#include "krasno/convex.hpp"
#include "krasno/detail/edge_index.hpp"
#include "krasno/gallery.hpp"

namespace krasno {

/// Which ray a first-exit query follows: the exact ray, or its limit when
/// rotated infinitesimally counter-clockwise / clockwise.
enum class RayMode { Exact, Ccw, Cw };

struct VisibilityRegion {
  Point2 base_point;
  bool skeletal = false;
  Region region;                   // two-dimensional part (polygonal galleries)
  std::vector<Segment2> antennae;  // one-dimensional parts (polygonal galleries)
  std::vector<Segment2> segments;  // maximal covered subsegments (skeletal galleries)

  /// Closed membership.
  bool contains(const Point2& p) const;
};

/// A gallery with its point-location index built once, for repeated queries.
class PreparedGallery {
 public:
  explicit PreparedGallery(Gallery g);

  const Gallery& gallery() const { return g_; }
  bool contains(const Point2& p) const;
  Location locate(const Point2& p) const;

  /// Largest t such that x + s d stays in K for all s in [0, t] (polygonal
  /// galleries); capped at *tmax when given.
  Rational first_exit(const Point2& x, const Point2& d, RayMode mode, const Rational* tmax = nullptr) const;

  bool sees(const Point2& x, const Point2& y) const;
  VisibilityRegion visibility(const Point2& x) const;

 private:
  void require_member(const Point2& p) const;
  bool exits_at(const Point2& p, const Point2& d, RayMode mode, bool at_origin) const;

  Gallery g_;
  detail::EdgeIndex index_;
  std::vector<Point2> vertices_;
};

/// Closed visibility: true iff [x, y] is contained in K. Throws NotInGallery.
bool sees(const Gallery& K, const Point2& x, const Point2& y);

/// Visibility region of x (polygonal or skeletal gallery).
VisibilityRegion visibility_polygon(const Gallery& K, const Point2& x);

/// Convex hull of the visibility region.
ConvexPolygon convex_visibility(const Gallery& K, const Point2& x);
ConvexPolygon convex_hull_of(const VisibilityRegion& v);

/// Two-dimensional part of the common visibility region of xs.
Region common_visibility(const Gallery& K, std::span<const Point2> xs);

/// A point seeing every point of xs (exact decision, including common
/// visibility sets of dimension zero or one), or nullopt.
std::optional<Point2> common_viewer(const Gallery& K, std::span<const Point2> xs);

/// Same decision from precomputed visibility regions; `area_part` must be the
/// intersection of their two-dimensional parts (polygonal case, ignored for
/// skeletal galleries).
std::optional<Point2> common_viewer_of(const PreparedGallery& K, std::span<const VisibilityRegion* const> vs,
                                       const Region& area_part);

bool skeletal_sees(const SkeletalGallery& S, const Point2& x, const Point2& y);

/// Maximal covered subsegments through x.
std::vector<Segment2> skeletal_visibility(const SkeletalGallery& S, const Point2& x);

}  // namespace krasno
