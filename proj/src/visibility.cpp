#include "krasno/visibility.hpp"

#include <algorithm>
#include <cmath>

#include "krasno/boolean.hpp"

namespace krasno {

using detail::DP;
using detail::to_dp;

namespace {

// sign(cross(u, v)) with u, v differences of exact points.
int cross_sign(const Point2& d, DP dd, const Point2& a, DP da, const Point2& x, DP dx) {
  const double mag = std::fabs(da.x) + std::fabs(da.y) + std::fabs(dx.x) + std::fabs(dx.y);
  const int s = detail::cross_sign_double(dd.x, dd.y, da.x - dx.x, da.y - dx.y, mag);
  if (s != 2) return s;
  return sgn(cross(d, a - x));
}

bool on_any(const std::vector<Segment2>& segs, const Point2& p) {
  for (const auto& s : segs)
    if (on_segment(s.a, s.b, p)) return true;
  return false;
}

}  // namespace

bool VisibilityRegion::contains(const Point2& p) const {
  if (skeletal) return on_any(segments, p);
  if (p == base_point) return true;
  if (on_any(antennae, p)) return true;
  return locate(region, p) != Location::Outside;
}

PreparedGallery::PreparedGallery(Gallery g) : g_(std::move(g)) {
  if (g_.is_polygonal()) {
    index_ = detail::EdgeIndex(g_.region);
    vertices_ = g_.region.vertices();
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  } else {
    vertices_ = g_.skeleton.endpoints();
  }
}

Location PreparedGallery::locate(const Point2& p) const {
  if (!g_.is_polygonal()) return g_.skeleton.contains(p) ? Location::Boundary : Location::Outside;
  return index_.locate(p);
}

bool PreparedGallery::contains(const Point2& p) const { return locate(p) != Location::Outside; }

void PreparedGallery::require_member(const Point2& p) const {
  if (!contains(p)) throw GeometryError(ErrorCode::NotInGallery, "point " + format_point(p) + " is not in the gallery");
}

bool PreparedGallery::exits_at(const Point2& p, const Point2& d, RayMode mode, bool at_origin) const {
  if (mode == RayMode::Exact) return index_.locate_perturbed(p, d) == Location::Outside;
  const int s = mode == RayMode::Ccw ? 1 : -1;
  std::vector<Point2> rays;
  for (auto& r : index_.edges_through(p))
    if (s * sgn(cross(d, r)) > 0) rays.push_back(std::move(r));
  std::sort(rays.begin(), rays.end(), [s](const Point2& a, const Point2& b) { return s * sgn(cross(a, b)) > 0; });
  std::vector<Point2> bounds;
  bounds.push_back(d);
  for (auto& r : rays)
    if (!same_direction(bounds.back(), r)) bounds.push_back(std::move(r));
  bounds.push_back(-d);
  const std::size_t arcs = at_origin ? 1 : bounds.size() - 1;
  for (std::size_t i = 0; i < arcs; ++i) {
    Point2 rep;
    if (bounds.size() == 2)
      rep = s > 0 ? perp(d) : -perp(d);
    else
      rep = l1_normalized(bounds[i]) + l1_normalized(bounds[i + 1]);
    if (index_.locate_perturbed(p, rep) == Location::Outside) return true;
  }
  return false;
}

Rational PreparedGallery::first_exit(const Point2& x, const Point2& d, RayMode mode, const Rational* tmax) const {
  if (!g_.is_polygonal()) throw GeometryError(ErrorCode::InvalidArgument, "first_exit needs a polygonal gallery");
  if (sgn(d.x) == 0 && sgn(d.y) == 0) throw GeometryError(ErrorCode::InvalidArgument, "zero ray direction");
  const DP dx = to_dp(x), dd = to_dp(d);
  const double tmax_d = tmax ? tmax->get_d() : 0;
  const Rational dd2 = dot(d, d);
  std::vector<Rational> ts;
  ts.emplace_back(0);
  for (const auto& e : index_.edges()) {
    // Quick reject of edges behind x or beyond tmax in doubles (generous slack).
    const int sa = cross_sign(d, dd, e.a, e.da, x, dx);
    const int sb = cross_sign(d, dd, e.b, e.db, x, dx);
    if (sa * sb > 0) continue;
    if (sa == 0 && sb == 0) {
      for (const Point2* q : {&e.a, &e.b}) {
        Rational t = dot(*q - x, d) / dd2;
        if (sgn(t) < 0) continue;
        if (tmax && t > *tmax) continue;
        ts.push_back(std::move(t));
      }
      continue;
    }
    const Point2 u = e.b - e.a;
    const Rational den = cross(d, u);
    Rational t = cross(e.a - x, u) / den;
    if (sgn(t) < 0) continue;
    if (tmax && t > *tmax) continue;
    ts.push_back(std::move(t));
  }
  (void)tmax_d;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (const auto& t : ts) {
    const Point2 p{x.x + t * d.x, x.y + t * d.y};
    if (exits_at(p, d, mode, sgn(t) == 0)) return t;
  }
  if (tmax) return *tmax;
  return ts.back();
}

bool PreparedGallery::sees(const Point2& x, const Point2& y) const {
  require_member(x);
  require_member(y);
  if (x == y) return true;
  if (!g_.is_polygonal()) return skeletal_sees(g_.skeleton, x, y);
  const Rational one = 1;
  const Point2 d = y - x;
  // Walk hits strictly before y; reaching y means the whole closed segment is in K.
  const Rational t = first_exit(x, d, RayMode::Exact, &one);
  return t >= 1;
}

VisibilityRegion PreparedGallery::visibility(const Point2& x) const {
  require_member(x);
  VisibilityRegion out;
  out.base_point = x;
  if (!g_.is_polygonal()) {
    out.skeletal = true;
    out.segments = skeletal_visibility(g_.skeleton, x);
    return out;
  }
  std::vector<Point2> dirs;
  for (const auto& v : vertices_)
    if (v != x) dirs.push_back(v - x);
  const Point2 ref{1, 0};
  std::sort(dirs.begin(), dirs.end(), [&](const Point2& a, const Point2& b) { return angle_less_from(ref, a, b); });
  std::vector<Point2> events;
  for (auto& d : dirs)
    if (events.empty() || !same_direction(events.back(), d)) events.push_back(std::move(d));

  Ring ring;
  for (const auto& d : events) {
    for (RayMode m : {RayMode::Cw, RayMode::Exact, RayMode::Ccw}) {
      const Rational t = first_exit(x, d, m);
      ring.push_back({x.x + t * d.x, x.y + t * d.y});
    }
  }
  Ring r;
  for (auto& p : ring)
    if (r.empty() || r.back() != p) r.push_back(std::move(p));
  while (r.size() > 1 && r.front() == r.back()) r.pop_back();

  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n && n >= 3; ++i) {
    const Point2& a = r[(i + n - 1) % n];
    const Point2& t = r[i];
    const Point2& b = r[(i + 1) % n];
    if (orient(a, t, b) == 0 && sgn(dot(t - a, b - t)) < 0) {
      const Point2& near = dot(a - t, a - t) < dot(b - t, b - t) ? a : b;
      out.antennae.push_back({near, t});
    }
  }
  if (n >= 3) out.region = resolve_nonzero({r});
  if (n == 2) out.antennae.push_back({r[0], r[1]});
  return out;
}

bool sees(const Gallery& K, const Point2& x, const Point2& y) {
  if (!K.is_polygonal()) {
    if (!K.skeleton.contains(x) || !K.skeleton.contains(y))
      throw GeometryError(ErrorCode::NotInGallery, "point not on the skeletal gallery");
    return skeletal_sees(K.skeleton, x, y);
  }
  return PreparedGallery(K).sees(x, y);
}

VisibilityRegion visibility_polygon(const Gallery& K, const Point2& x) { return PreparedGallery(K).visibility(x); }

ConvexPolygon convex_hull_of(const VisibilityRegion& v) {
  std::vector<Point2> pts{v.base_point};
  if (v.skeletal) {
    for (const auto& s : v.segments) {
      pts.push_back(s.a);
      pts.push_back(s.b);
    }
  } else {
    for (const auto& p : v.region.vertices()) pts.push_back(p);
    for (const auto& s : v.antennae) {
      pts.push_back(s.a);
      pts.push_back(s.b);
    }
  }
  return convex_hull(pts);
}

ConvexPolygon convex_visibility(const Gallery& K, const Point2& x) { return convex_hull_of(visibility_polygon(K, x)); }

Region common_visibility(const Gallery& K, std::span<const Point2> xs) {
  if (xs.empty()) throw GeometryError(ErrorCode::EmptyInput, "common_visibility of no points");
  if (!K.is_polygonal()) throw GeometryError(ErrorCode::InvalidArgument, "common_visibility region needs a polygonal gallery");
  PreparedGallery pg(K);
  Region acc = pg.visibility(xs[0]).region;
  for (std::size_t i = 1; i < xs.size() && !acc.empty(); ++i) acc = region_intersection(acc, pg.visibility(xs[i]).region);
  return acc;
}

namespace {

std::vector<Segment2> boundary_pieces(const VisibilityRegion& v) {
  std::vector<Segment2> out;
  for (const auto& [a, b] : v.region.directed_edges()) out.push_back({a, b});
  for (const auto& s : v.antennae) out.push_back(s);
  return out;
}

using Piece = ConvexPolygon;  // point or segment

std::optional<Point2> skeletal_common(std::span<const VisibilityRegion* const> vs) {
  std::vector<Piece> acc;
  for (const auto& s : vs[0]->segments) acc.push_back({{std::min(s.a, s.b), std::max(s.a, s.b)}});
  for (std::size_t i = 1; i < vs.size() && !acc.empty(); ++i) {
    std::vector<Piece> next;
    for (const auto& p : acc)
      for (const auto& s : vs[i]->segments)
        if (auto x = convex_intersect(p, Piece{{std::min(s.a, s.b), std::max(s.a, s.b)}})) next.push_back(*x);
    acc = std::move(next);
  }
  if (acc.empty()) return std::nullopt;
  Point2 best = acc[0].vertices[0];
  for (const auto& p : acc)
    for (const auto& v : p.vertices)
      if (v < best) best = v;
  return best;
}

}  // namespace

std::optional<Point2> common_viewer_of(const PreparedGallery& K, std::span<const VisibilityRegion* const> vs,
                                       const Region& area_part) {
  if (vs.empty()) throw GeometryError(ErrorCode::EmptyInput, "common_viewer of no points");
  if (!K.gallery().is_polygonal()) return skeletal_common(vs);
  if (!area_part.empty()) {
    Point2 best = area_part.components[0].outer[0];
    for (const auto& c : area_part.components)
      if (c.outer[0] < best) best = c.outer[0];
    return best;
  }
  // The lexicographic minimum of a nonempty common part is a vertex of some
  // visibility region, an antenna end, or a crossing of pieces of two regions.
  std::vector<std::vector<Segment2>> pieces;
  for (const auto* v : vs) pieces.push_back(boundary_pieces(*v));
  std::vector<Point2> cand;
  for (const auto& ps : pieces)
    for (const auto& s : ps) {
      cand.push_back(s.a);
      cand.push_back(s.b);
    }
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      for (const auto& s : pieces[i])
        for (const auto& t : pieces[j]) {
          auto x = intersect_segments(s, t);
          if (x.kind == SegmentIntersection::Kind::None) continue;
          cand.push_back(x.p);
          if (x.kind == SegmentIntersection::Kind::Overlap) cand.push_back(x.q);
        }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& c : cand) {
    bool all = true;
    for (const auto* v : vs)
      if (!K.sees(v->base_point, c)) {
        all = false;
        break;
      }
    if (all) return c;
  }
  return std::nullopt;
}

std::optional<Point2> common_viewer(const Gallery& K, std::span<const Point2> xs) {
  if (xs.empty()) throw GeometryError(ErrorCode::EmptyInput, "common_viewer of no points");
  PreparedGallery pg(K);
  std::vector<VisibilityRegion> vs;
  for (const auto& x : xs) vs.push_back(pg.visibility(x));
  std::vector<const VisibilityRegion*> ptrs;
  for (const auto& v : vs) ptrs.push_back(&v);
  Region acc;
  if (K.is_polygonal()) {
    acc = vs[0].region;
    for (std::size_t i = 1; i < vs.size() && !acc.empty(); ++i) acc = region_intersection(acc, vs[i].region);
  }
  return common_viewer_of(pg, ptrs, acc);
}

bool skeletal_sees(const SkeletalGallery& S, const Point2& x, const Point2& y) {
  if (!S.contains(x) || !S.contains(y)) throw GeometryError(ErrorCode::NotInGallery, "point not on the skeletal gallery");
  if (x == y) return true;
  const Point2 d = y - x;
  const Rational dd = dot(d, d);
  std::vector<std::pair<Rational, Rational>> iv;
  for (const auto& s : S.segments) {
    if (orient(x, y, s.a) != 0 || orient(x, y, s.b) != 0) continue;
    Rational ta = dot(s.a - x, d) / dd, tb = dot(s.b - x, d) / dd;
    if (tb < ta) std::swap(ta, tb);
    iv.emplace_back(std::move(ta), std::move(tb));
  }
  std::sort(iv.begin(), iv.end());
  Rational reach = 0;
  bool started = false;
  for (const auto& [a, b] : iv) {
    if (!started) {
      if (a > 0) return false;
      started = true;
      if (b > reach) reach = b;
    } else {
      if (a > reach) break;
      if (b > reach) reach = b;
    }
    if (reach >= 1) return true;
  }
  return started && reach >= 1;
}

std::vector<Segment2> skeletal_visibility(const SkeletalGallery& S, const Point2& x) {
  if (!S.contains(x)) throw GeometryError(ErrorCode::NotInGallery, "point not on the skeletal gallery");
  std::vector<Segment2> out;
  std::vector<Point2> seen_dirs;
  for (const auto& s : S.segments) {
    if (!on_segment(s.a, s.b, x)) continue;
    const Point2 d = s.b - s.a;
    bool dup = false;
    for (const auto& e : seen_dirs)
      if (sgn(cross(e, d)) == 0) dup = true;
    if (dup) continue;
    seen_dirs.push_back(d);
    // Covered intervals on the line through x with direction d.
    const Rational dd = dot(d, d);
    std::vector<std::pair<Rational, Rational>> iv;
    for (const auto& t : S.segments) {
      if (sgn(cross(d, t.a - x)) != 0 || sgn(cross(d, t.b - x)) != 0) continue;
      Rational ta = dot(t.a - x, d) / dd, tb = dot(t.b - x, d) / dd;
      if (tb < ta) std::swap(ta, tb);
      iv.emplace_back(std::move(ta), std::move(tb));
    }
    std::sort(iv.begin(), iv.end());
    Rational lo = 0, hi = 0;
    bool have = false;
    for (const auto& [a, b] : iv) {
      if (!have) {
        lo = a;
        hi = b;
        have = true;
      } else if (a <= hi) {
        if (b > hi) hi = b;
      } else {
        if (sgn(lo) <= 0 && sgn(hi) >= 0) break;
        lo = a;
        hi = b;
      }
    }
    out.push_back({Point2{x.x + lo * d.x, x.y + lo * d.y}, Point2{x.x + hi * d.x, x.y + hi * d.y}});
  }
  return out;
}

}  // namespace krasno
