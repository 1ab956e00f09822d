#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "krasno/convex.hpp"
#include "krasno/geometry.hpp"
#include "krasno/param.hpp"

namespace krasno {

/// Closed axis-parallel box [anchor, anchor + (w, h)].
struct Box2 {
  Point2 anchor;
  Rational w, h;

  Rational area() const { return w * h; }
  ConvexPolygon polygon() const;
};

struct Disc {
  Eigen::Vector2d center;
  double radius = 0;
  double area() const;
};

/// center + A * (unit disc), A symmetric positive definite.
struct Ellipse {
  Eigen::Vector2d center;
  Eigen::Matrix2d A;
  double area() const;
};

/// Closed segment [y, y + z]; endpoints are exact.
struct SegmentWitness {
  Point2 a, b;
  double measure = 0;  // v-width or norm length achieved
  bool resolution_limited = false;
};

struct InscribeOptions {
  int aspect_samples = 512;
  int refine_iters = 60;
  int seed_grid = 8;  // seed points per axis for convex cores of non-convex regions
};

/// { c : c + [0,w] x [0,h] inside C }; nullopt when no placement exists.
std::optional<ConvexPolygon> erode_convex_by_box(const ConvexPolygon& C, const Rational& w, const Rational& h);

/// Exact closed containment of a convex polygon (non-degenerate) in a region.
bool convex_in_region(const ConvexPolygon& P, const Region& R);

/// Convex subsets of R (a hull for convex_hint, otherwise convex cores of
/// visibility regions around seed points).
std::vector<ConvexPolygon> convex_pieces(const Region& R, bool convex_hint, const InscribeOptions& opt = {});

/// A box of area exactly a inside R, certified exactly. nullopt means
/// "not found at this resolution".
std::optional<Box2> contains_box_of_area(const Region& R, double a, bool convex_hint, const InscribeOptions& opt = {});
std::optional<Box2> contains_box_of_axis_sum(const Region& R, double s, bool convex_hint, const InscribeOptions& opt = {});

/// Largest box area found (0 when nothing fits), certified.
std::optional<Box2> largest_box(const Region& R, bool convex_hint, const InscribeOptions& opt = {});

/// Chebyshev centre. Throws EmptyInput for degenerate input.
Disc max_inscribed_disc(const ConvexPolygon& C);

/// Maximum-area inscribed ellipse. Throws NonConvergence.
Ellipse mvie(const ConvexPolygon& C, double tol = 1e-8);

/// Largest disc / ellipse found inside R over its convex pieces.
std::optional<Disc> largest_disc(const Region& R, bool convex_hint, const InscribeOptions& opt = {});
std::optional<Ellipse> largest_ellipse(const Region& R, bool convex_hint, const InscribeOptions& opt = {});

/// Containment with relative margin: centre inside and every edge at distance
/// at least r * (1 - margin) (discs) or outside the shrunken ellipse.
bool disc_in_region(const Disc& D, const Region& R, double margin = 1e-9);
bool ellipse_in_region(const Ellipse& E, const Region& R, double margin = 1e-9);

SegmentWitness longest_vwidth_segment(const Region& R, const Eigen::Vector2d& v, bool convex_hint);
SegmentWitness longest_norm_segment(const Region& R, const PolytopeNormBall& B, bool convex_hint);

}  // namespace krasno
