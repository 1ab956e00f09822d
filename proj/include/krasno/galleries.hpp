#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "krasno/convex.hpp"
#include "krasno/gallery.hpp"

namespace krasno {

struct ColorClass {
  std::string name;
  std::vector<Point2> points;
};

struct ColoredGallery {
  Gallery gallery;
  std::vector<ColorClass> classes;
  std::map<std::string, std::string> metadata;  // generator, seed, ...
};

/// The pinched 8-gon with red, blue and black classes.
ColoredGallery gen_fig1();

/// 24-segment skeletal gallery with viewers p1..p8 and classes r, g, b. The
/// viewers are stored as class "viewers".
ColoredGallery gen_spider();

/// Skeletal counterexample for point classes: one guard per colorful tuple,
/// joined to each point of its tuple. Guards are stored as class "guards" in
/// tuple order (first class varies slowest). Throws ResamplingExhausted.
ColoredGallery gen_claim22(int n, const std::vector<int>& class_sizes, std::uint64_t seed, int max_attempts = 200);

struct Claim22Report {
  bool tuples_seen = true;        // every colorful tuple seen by its guard
  int max_seen_per_class = 0;     // over endpoints and segment crossings
  std::size_t candidates = 0;
  bool ok() const { return tuples_seen && max_seen_per_class <= 2; }
};
Claim22Report verify_claim22(const ColoredGallery& g);

// ---- spiked non-exactness gallery (plane) ----

struct SpikeModel {
  double M = 10, Mp = 9;
  int disc_verts = 720;
  ConvexPolygon unit_disc;  // area-1 disc polygon (area within 1e-8 of 1)
  ConvexPolygon big_disc;   // inscribed in the circle of radius M'

  static SpikeModel make(double M, double Mp, int disc_verts);
  Point2 apex(double theta) const;  // M (cos, sin), dyadic
  /// The cone from the apex over the unit-disc polygon.
  std::vector<HalfPlane> cone(const Point2& apex) const;
};

/// Area of big_disc intersected with the cones at the given angles (exact).
Rational f_volume(const SpikeModel& S, const std::vector<double>& thetas);
/// Floating-point evaluation of the same quantity.
double f_volume_approx(const SpikeModel& S, const std::vector<double>& thetas);

struct MEstimate {
  double m = 0;
  std::vector<double> thetas;
  bool upper_bound = true;
};
enum class MStrategy { Grid, Multistart };
MEstimate estimate_m(const SpikeModel& S, int n, MStrategy strategy, int budget, std::uint64_t seed);

struct SpikedGalleryParams {
  int n = 4;
  double M = 10, Mp = 9;
  int disc_verts = 720;
  double m = 0, epsilon = 0, delta = 0;
  std::vector<double> thetas;  // equally spaced directions S
  Rational cap_area;           // area of the intersection of all cones
  Rational scale;              // about m^{-1/2}
  std::vector<Point2> tips;    // apexes, unscaled
};

struct SpikedGallery {
  Gallery unscaled;
  Gallery scaled;
  SpikedGalleryParams params;
};

/// Throws InvalidArgument for bad radii and NoSpikeCount when no direction
/// count up to 10^4 meets the area bound.
SpikedGallery gen_spiked(int n, double M, double Mp, int disc_verts, std::uint64_t seed, int budget = 50);

/// Polygon with a nonempty kernel (radial construction around the origin).
SimplePolygon gen_star(std::uint64_t seed, int n_vertices, double irregularity = 0.5);
/// Random simple polygon (2-opt untangling of a random vertex order).
SimplePolygon gen_simple(std::uint64_t seed, int n_vertices);

}  // namespace krasno
