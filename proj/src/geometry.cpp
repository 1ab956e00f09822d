#include "krasno/geometry.hpp"

#include <algorithm>

#include "krasno/detail/predicates.hpp"

namespace krasno {

using detail::DP;
using detail::to_dp;

Point2 parse_point(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw GeometryError(ErrorCode::Parse, "expected 'x,y', got '" + std::string(text) + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string format_point(const Point2& p) { return format_rational(p.x) + "," + format_rational(p.y); }

int orient(const Point2& p, const Point2& q, const Point2& r) {
  return detail::orient_f(p, q, r, to_dp(p), to_dp(q), to_dp(r));
}

bool on_segment(const Point2& p, const Point2& q, const Point2& r) {
  if (orient(p, q, r) != 0) return false;
  return r.x >= std::min(p.x, q.x) && r.x <= std::max(p.x, q.x) && r.y >= std::min(p.y, q.y) && r.y <= std::max(p.y, q.y);
}

Point2 l1_normalized(const Point2& d) {
  Rational n = abs(d.x) + abs(d.y);
  if (n == 0) throw GeometryError(ErrorCode::InvalidArgument, "zero direction");
  return {d.x / n, d.y / n};
}

namespace {
// 0 for angles in [0, pi) measured from ref, 1 for [pi, 2pi).
int half_of(const Point2& ref, const Point2& a) {
  const int c = sgn(cross(ref, a));
  if (c > 0) return 0;
  if (c < 0) return 1;
  return sgn(dot(ref, a)) > 0 ? 0 : 1;
}
}  // namespace

bool angle_less_from(const Point2& ref, const Point2& a, const Point2& b) {
  const int ha = half_of(ref, a), hb = half_of(ref, b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

bool same_direction(const Point2& a, const Point2& b) { return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0; }

SegmentIntersection intersect_segments(const Segment2& s, const Segment2& t) {
  SegmentIntersection out;
  const Point2 &p = s.a, &p2 = s.b, &q = t.a, &q2 = t.b;
  if (s.degenerate() || t.degenerate()) {
    if (s.degenerate() && t.degenerate()) {
      if (p == q) out = {SegmentIntersection::Kind::Point, p, p};
    } else if (s.degenerate()) {
      if (on_segment(q, q2, p)) out = {SegmentIntersection::Kind::Point, p, p};
    } else if (on_segment(p, p2, q)) {
      out = {SegmentIntersection::Kind::Point, q, q};
    }
    return out;
  }
  const int o1 = orient(p, p2, q), o2 = orient(p, p2, q2);
  if (o1 * o2 > 0) return out;
  const int o3 = orient(q, q2, p), o4 = orient(q, q2, p2);
  if (o3 * o4 > 0) return out;

  if (o1 == 0 && o2 == 0) {
    // Collinear: overlap of the lexicographic intervals.
    Point2 a1 = std::min(p, p2), b1 = std::max(p, p2);
    Point2 a2 = std::min(q, q2), b2 = std::max(q, q2);
    Point2 lo = std::max(a1, a2), hi = std::min(b1, b2);
    if (hi < lo) return out;
    if (lo == hi) return {SegmentIntersection::Kind::Point, lo, lo};
    return {SegmentIntersection::Kind::Overlap, lo, hi};
  }
  if (o1 == 0) return {SegmentIntersection::Kind::Point, q, q};
  if (o2 == 0) return {SegmentIntersection::Kind::Point, q2, q2};
  if (o3 == 0) return {SegmentIntersection::Kind::Point, p, p};
  if (o4 == 0) return {SegmentIntersection::Kind::Point, p2, p2};
  const Point2 d = p2 - p, e = q2 - q;
  const Rational tpar = cross(q - p, e) / cross(d, e);
  Point2 x{p.x + tpar * d.x, p.y + tpar * d.y};
  return {SegmentIntersection::Kind::Point, x, x};
}

Rational signed_area2(std::span<const Point2> ring) {
  Rational s = 0;
  const std::size_t n = ring.size();
  if (n < 3) return s;
  // Translate to the first vertex to keep intermediate sizes down.
  const Point2& o = ring[0];
  for (std::size_t i = 1; i + 1 < n; ++i) s += cross(ring[i] - o, ring[i + 1] - o);
  return s;
}

Ring drop_collinear(const Ring& ring) {
  Ring r;
  r.reserve(ring.size());
  for (const auto& p : ring)
    if (r.empty() || r.back() != p) r.push_back(p);
  while (r.size() > 1 && r.front() == r.back()) r.pop_back();
  bool changed = true;
  while (changed && r.size() >= 3) {
    changed = false;
    Ring next;
    next.reserve(r.size());
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = r[(i + n - 1) % n];
      const Point2& b = r[i];
      const Point2& c = r[(i + 1) % n];
      // Drop b when it lies strictly inside the straight run a-c.
      if (orient(a, b, c) == 0 && sgn(dot(b - a, c - b)) > 0) {
        changed = true;
        continue;
      }
      next.push_back(b);
    }
    r = std::move(next);
  }
  return r;
}

Ring canonical_rotation(Ring ring) {
  if (ring.empty()) return ring;
  auto it = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), it, ring.end());
  return ring;
}

bool is_simple_ring(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (ring[i] == ring[(i + 1) % n]) return false;
  std::vector<DP> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = to_dp(ring[i]);
  struct E {
    double xmin, xmax, ymin, ymax;
    std::size_t i;
  };
  std::vector<E> es(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DP a = d[i], b = d[(i + 1) % n];
    es[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y), i};
  }
  std::sort(es.begin(), es.end(), [](const E& a, const E& b) { return a.xmin < b.xmin; });
  auto slack = [](double v) { return 1e-9 * (1 + std::fabs(v)); };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n && es[t].xmin <= es[s].xmax + slack(es[s].xmax); ++t) {
      if (es[t].ymin > es[s].ymax + slack(es[s].ymax) || es[s].ymin > es[t].ymax + slack(es[t].ymax)) continue;
      std::size_t i = es[s].i, j = es[t].i;
      if (i > j) std::swap(i, j);
      Segment2 si{ring[i], ring[(i + 1) % n]}, sj{ring[j], ring[(j + 1) % n]};
      auto x = intersect_segments(si, sj);
      if (x.kind == SegmentIntersection::Kind::None) continue;
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (!adjacent) return false;
      if (x.kind == SegmentIntersection::Kind::Overlap) return false;
      // Adjacent edges may only share their common vertex.
      const Point2& common = (j == i + 1) ? ring[j] : ring[0];
      if (x.p != common) return false;
    }
  }
  return true;
}

SimplePolygon SimplePolygon::make(Ring vertices) {
  if (vertices.size() < 3) throw GeometryError(ErrorCode::InvalidPolygon, "fewer than 3 vertices");
  if (!is_simple_ring(vertices)) throw GeometryError(ErrorCode::InvalidPolygon, "ring is not simple");
  const int s = sgn(signed_area2(vertices));
  if (s == 0) throw GeometryError(ErrorCode::InvalidPolygon, "zero area");
  if (s < 0) std::reverse(vertices.begin(), vertices.end());
  return SimplePolygon{std::move(vertices)};
}

Rational SimplePolygon::area() const { return signed_area2(vertices) / 2; }

Rational PolygonWithHoles::area() const {
  Rational s = signed_area2(outer);
  for (const auto& h : holes) s += signed_area2(h);
  return s / 2;
}

Region Region::from_simple(const SimplePolygon& p) { return Region{{PolygonWithHoles{p.vertices, {}}}}; }

Region Region::from_polygon(PolygonWithHoles p) { return Region{{std::move(p)}}; }

Rational Region::area() const {
  Rational s = 0;
  for (const auto& c : components) s += c.area();
  return s;
}

Rational area(const Region& r) { return r.area(); }

BBox bbox_of(std::span<const Point2> pts) {
  if (pts.empty()) throw GeometryError(ErrorCode::EmptyInput, "bbox of empty set");
  BBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    if (p.x < b.xmin) b.xmin = p.x;
    if (p.x > b.xmax) b.xmax = p.x;
    if (p.y < b.ymin) b.ymin = p.y;
    if (p.y > b.ymax) b.ymax = p.y;
  }
  return b;
}

BBox Region::bbox() const {
  std::vector<Point2> outers;
  for (const auto& c : components) outers.insert(outers.end(), c.outer.begin(), c.outer.end());
  return bbox_of(outers);
}

std::vector<std::pair<Point2, Point2>> Region::directed_edges() const {
  std::vector<std::pair<Point2, Point2>> out;
  auto add = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out.emplace_back(r[i], r[(i + 1) % r.size()]);
  };
  for (const auto& c : components) {
    add(c.outer);
    for (const auto& h : c.holes) add(h);
  }
  return out;
}

std::vector<Point2> Region::vertices() const {
  std::vector<Point2> out;
  for (const auto& c : components) {
    out.insert(out.end(), c.outer.begin(), c.outer.end());
    for (const auto& h : c.holes) out.insert(out.end(), h.begin(), h.end());
  }
  return out;
}

std::size_t Region::edge_count() const {
  std::size_t n = 0;
  for (const auto& c : components) {
    n += c.outer.size();
    for (const auto& h : c.holes) n += h.size();
  }
  return n;
}

Location locate(const Region& r, const Point2& p) {
  const DP dp = to_dp(p);
  int w = 0;
  for (const auto& [a, b] : r.directed_edges()) {
    const DP da = to_dp(a), db = to_dp(b);
    const int o = detail::orient_f(a, b, p, da, db, dp);
    if (o == 0 && p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y))
      return Location::Boundary;
    if (a.y <= p.y) {
      if (b.y > p.y && o > 0) ++w;
    } else if (b.y <= p.y && o < 0) {
      --w;
    }
  }
  return w != 0 ? Location::Inside : Location::Outside;
}

Region scale_region(const Region& r, const Rational& s) {
  if (sgn(s) <= 0) throw GeometryError(ErrorCode::InvalidArgument, "scale factor must be positive");
  Region out = r;
  for (auto& c : out.components) {
    for (auto& p : c.outer) p = s * p;
    for (auto& h : c.holes)
      for (auto& p : h) p = s * p;
  }
  return out;
}

Region scale_region(const Region& r, double s) {
  if (!(s > 0)) throw GeometryError(ErrorCode::InvalidArgument, "scale factor must be positive");
  return scale_region(r, rationalize(s));
}

Region translate_region(const Region& r, const Point2& offset) {
  Region out = r;
  for (auto& c : out.components) {
    for (auto& p : c.outer) p = p + offset;
    for (auto& h : c.holes)
      for (auto& p : h) p = p + offset;
  }
  return out;
}

}  // namespace krasno
