#pragma once

#include <string>
#include <vector>

#include "krasno/galleries.hpp"
#include "krasno/inscribe.hpp"

namespace krasno::io {

struct Overlay {
  enum class Kind { Region, Segments, Points, Box, Disc, Ellipse } kind = Kind::Region;
  std::string css_class;
  Region region;
  std::vector<Segment2> segments;
  std::vector<Point2> points;
  std::optional<Box2> box;
  std::optional<Disc> disc;
  std::optional<Ellipse> ellipse;
};

/// Deterministic SVG: gallery fill (holes even-odd), class points, then
/// overlays in the given order. Coordinates use 6 decimals.
std::string render_svg(const ColoredGallery& g, const std::vector<Overlay>& overlays, int width = 800);

}  // namespace krasno::io
