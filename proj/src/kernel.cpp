#include "krasno/kernel.hpp"

#include <algorithm>

#include "krasno/boolean.hpp"
#include "krasno/parallel.hpp"

namespace krasno {

Kernel kernel_simple(const SimplePolygon& P) {
  const auto& v = P.vertices;
  if (v.size() < 3 || !is_simple_ring(v) || sgn(signed_area2(v)) <= 0)
    throw GeometryError(ErrorCode::InvalidPolygon, "kernel_simple needs a counter-clockwise simple polygon");
  Kernel k;
  for (std::size_t i = 0; i < v.size(); ++i) k.certificate.push_back(HalfPlane::left_of(v[i], v[(i + 1) % v.size()]));
  auto res = halfplane_intersect(k.certificate, bbox_of(v));
  if (res.kind == HalfPlaneResult::Kind::Empty) return k;
  k.empty = false;
  k.region = std::move(res.polygon);
  return k;
}

bool point_in_kernel(const PreparedGallery& K, const Point2& x) {
  if (!K.contains(x)) throw GeometryError(ErrorCode::NotInGallery, "point " + format_point(x) + " is not in the gallery");
  const Gallery& g = K.gallery();
  if (!g.is_polygonal()) {
    // x sees a whole segment only along its supporting line.
    for (const auto& s : g.skeleton.segments)
      if (orient(s.a, s.b, x) != 0 || !K.sees(x, s.a) || !K.sees(x, s.b)) return false;
    return true;
  }
  // Seeing every vertex is necessary; the triangle test below is the decision.
  for (const auto& p : g.region.vertices())
    if (!K.sees(x, p)) return false;
  for (const auto& [u, v] : g.region.directed_edges()) {
    if (orient(x, u, v) == 0) {
      if (!K.sees(x, u) || !K.sees(x, v)) return false;
      continue;
    }
    Ring tri = orient(x, u, v) > 0 ? Ring{x, u, v} : Ring{x, v, u};
    Region t = Region{{PolygonWithHoles{tri, {}}}};
    if (sgn(region_difference(t, g.region).area()) != 0) return false;
  }
  return true;
}

bool point_in_kernel(const Gallery& K, const Point2& x) { return point_in_kernel(PreparedGallery(K), x); }

std::optional<ConvexPolygon> kernel_conv_characterization(const Gallery& K, std::span<const Point2> sample) {
  if (sample.empty()) throw GeometryError(ErrorCode::EmptyInput, "empty sample");
  PreparedGallery pg(K);
  std::optional<ConvexPolygon> acc;
  for (const auto& x : sample) {
    ConvexPolygon h = convex_hull_of(pg.visibility(x));
    if (!acc) {
      acc = std::move(h);
    } else {
      acc = convex_intersect(*acc, h);
      if (!acc) return std::nullopt;
    }
  }
  return acc;
}

std::vector<Point2> bbox_grid(const BBox& box, int resolution) {
  if (resolution < 2) throw GeometryError(ErrorCode::InvalidArgument, "grid resolution must be at least 2");
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(resolution) * resolution);
  const Rational dx = (box.xmax - box.xmin) / (resolution - 1);
  const Rational dy = (box.ymax - box.ymin) / (resolution - 1);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) out.push_back({box.xmin + i * dx, box.ymin + j * dy});
  return out;
}

std::vector<Point2> kernel_brute(const Gallery& K, int resolution) {
  auto grid = bbox_grid(K.bbox(), resolution);
  PreparedGallery pg(K);
  std::vector<char> keep(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t i) {
    if (pg.contains(grid[i]) && point_in_kernel(pg, grid[i])) keep[i] = 1;
  });
  std::vector<Point2> out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (keep[i]) out.push_back(grid[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Point2> find_kernel_point(const Gallery& K, int resolution, bool* resolution_limited) {
  if (resolution_limited) *resolution_limited = false;
  if (K.is_polygonal() && K.region.components.size() == 1 && K.region.components[0].holes.empty()) {
    auto k = kernel_simple(SimplePolygon{K.region.components[0].outer});
    if (k.empty) return std::nullopt;
    return k.region.vertices[0];
  }
  if (K.is_polygonal()) {
    for (const auto& c : K.region.components)
      if (!c.holes.empty()) return std::nullopt;  // a hole always hides the points behind it
    std::vector<HalfPlane> hs;
    for (const auto& [a, b] : K.region.directed_edges()) hs.push_back(HalfPlane::left_of(a, b));
    auto res = halfplane_intersect(hs, K.bbox());
    if (res.kind == HalfPlaneResult::Kind::Empty) return std::nullopt;
    PreparedGallery pg(K);
    for (const auto& v : res.polygon.vertices)
      if (pg.contains(v) && point_in_kernel(pg, v)) return v;
  }
  if (resolution_limited) *resolution_limited = true;
  PreparedGallery pg(K);
  for (const auto& p : bbox_grid(K.bbox(), resolution))
    if (pg.contains(p) && point_in_kernel(pg, p)) return p;
  return std::nullopt;
}

}  // namespace krasno
