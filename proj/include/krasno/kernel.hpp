#pragma once

#include <optional>
#include <span>
#include <vector>

#include "krasno/convex.hpp"
#include "krasno/gallery.hpp"
#include "krasno/visibility.hpp"

namespace krasno {

struct Kernel {
  bool empty = true;
  ConvexPolygon region;                // may be a degenerate point or segment
  std::vector<HalfPlane> certificate;  // supporting half-planes (one per edge)

  Rational area() const { return empty ? Rational(0) : region.area(); }
};

/// Intersection of the inner half-planes of all edges of P.
Kernel kernel_simple(const SimplePolygon& P);

/// Exact star-centre test. Throws NotInGallery when x is outside K.
bool point_in_kernel(const Gallery& K, const Point2& x);
bool point_in_kernel(const PreparedGallery& K, const Point2& x);

/// Intersection of conv(V_x) over the sample; nullopt when empty.
std::optional<ConvexPolygon> kernel_conv_characterization(const Gallery& K, std::span<const Point2> sample);

/// Grid points (resolution x resolution over the bounding box) lying in the
/// kernel, sorted lexicographically.
std::vector<Point2> kernel_brute(const Gallery& K, int resolution);

/// The grid used by kernel_brute.
std::vector<Point2> bbox_grid(const BBox& box, int resolution);

/// Convenience for reports: some kernel point, if one is found. Exact for
/// simply connected galleries and galleries with holes; for other galleries a
/// grid search of the given resolution is used when the half-plane bound
/// leaves room (`resolution_limited` is then set).
std::optional<Point2> find_kernel_point(const Gallery& K, int resolution, bool* resolution_limited = nullptr);

}  // namespace krasno
