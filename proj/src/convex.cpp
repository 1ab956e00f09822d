#include "krasno/convex.hpp"

#include <algorithm>
#include <cmath>

namespace krasno {

HalfPlane HalfPlane::left_of(const Point2& a, const Point2& b) {
  const Point2 d = b - a;
  HalfPlane h{d.y, -d.x, 0};
  h.offset = h.nx * a.x + h.ny * a.y;
  return h;
}

Rational ConvexPolygon::area() const {
  if (degenerate()) return 0;
  return signed_area2(vertices) / 2;
}

bool ConvexPolygon::contains(const Point2& p) const {
  const std::size_t n = vertices.size();
  if (n == 0) return false;
  if (n == 1) return vertices[0] == p;
  if (n == 2) return on_segment(vertices[0], vertices[1], p);
  for (std::size_t i = 0; i < n; ++i)
    if (orient(vertices[i], vertices[(i + 1) % n], p) < 0) return false;
  return true;
}

Region ConvexPolygon::to_region() const {
  if (degenerate()) return {};
  return Region{{PolygonWithHoles{canonical_rotation(vertices), {}}}};
}

std::vector<HalfPlane> ConvexPolygon::halfplanes() const {
  std::vector<HalfPlane> out;
  const std::size_t n = vertices.size();
  if (n < 3) return out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(HalfPlane::left_of(vertices[i], vertices[(i + 1) % n]));
  return out;
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
  if (points.empty()) throw GeometryError(ErrorCode::EmptyInput, "convex_hull of no points");
  std::vector<Point2> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return {p};
  std::vector<Point2> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return {{p.front(), p.back()}};
  return {h};
}

namespace {

struct Vtx {
  Point2 p;
  HalfPlane out;  // supporting line of the edge leaving p
};

Point2 line_meet(const HalfPlane& a, const HalfPlane& b) {
  const Rational det = a.nx * b.ny - a.ny * b.nx;
  return {(a.offset * b.ny - b.offset * a.ny) / det, (a.nx * b.offset - b.nx * a.offset) / det};
}

int side(const HalfPlane& h, const Point2& p) { return sgn(h.nx * p.x + h.ny * p.y - h.offset); }

// Clip a full-dimensional ring; returns an empty vector for the empty set.
std::vector<Vtx> clip_ring(const std::vector<Vtx>& ring, const HalfPlane& h) {
  const std::size_t n = ring.size();
  std::vector<int> s(n);
  bool any_out = false, any_in = false;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = side(h, ring[i].p);
    any_out |= s[i] > 0;
    any_in |= s[i] <= 0;
  }
  if (!any_out) return ring;
  if (!any_in) return {};
  std::vector<Vtx> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Vtx& cur = ring[i];
    if (s[i] <= 0) {
      if (s[j] <= 0) {
        out.push_back(cur);
      } else if (s[i] == 0) {
        out.push_back({cur.p, h});
      } else {
        out.push_back(cur);
        out.push_back({line_meet(cur.out, h), h});
      }
    } else if (s[j] < 0) {
      out.push_back({line_meet(cur.out, h), cur.out});
    }
  }
  std::vector<Vtx> dedup;
  for (auto& v : out)
    if (dedup.empty() || dedup.back().p != v.p) dedup.push_back(std::move(v));
  while (dedup.size() > 1 && dedup.front().p == dedup.back().p) dedup.pop_back();
  return dedup;
}

ConvexPolygon ring_to_polygon(const std::vector<Vtx>& ring) {
  std::vector<Point2> pts;
  for (const auto& v : ring) pts.push_back(v.p);
  return convex_hull(pts);
}

std::vector<Vtx> polygon_ring(const ConvexPolygon& c) {
  std::vector<Vtx> r;
  const std::size_t n = c.vertices.size();
  for (std::size_t i = 0; i < n; ++i) r.push_back({c.vertices[i], HalfPlane::left_of(c.vertices[i], c.vertices[(i + 1) % n])});
  return r;
}

// Clip a point or segment.
std::optional<ConvexPolygon> clip_degenerate(const ConvexPolygon& c, std::span<const HalfPlane> hs) {
  if (c.vertices.size() == 1) {
    for (const auto& h : hs)
      if (!h.contains(c.vertices[0])) return std::nullopt;
    return c;
  }
  // Segment a + t (b - a), t in [lo, hi].
  const Point2& a = c.vertices[0];
  const Point2 d = c.vertices[1] - a;
  Rational lo = 0, hi = 1;
  for (const auto& h : hs) {
    const Rational num = h.offset - (h.nx * a.x + h.ny * a.y);
    const Rational den = h.nx * d.x + h.ny * d.y;
    if (den == 0) {
      if (num < 0) return std::nullopt;
      continue;
    }
    const Rational t = num / den;
    if (den > 0) {
      if (t < hi) hi = t;
    } else if (t > lo) {
      lo = t;
    }
    if (hi < lo) return std::nullopt;
  }
  Point2 p{a.x + lo * d.x, a.y + lo * d.y}, q{a.x + hi * d.x, a.y + hi * d.y};
  if (p == q) return ConvexPolygon{{p}};
  return ConvexPolygon{{std::min(p, q), std::max(p, q)}};
}

}  // namespace

std::optional<ConvexPolygon> clip_convex(const ConvexPolygon& c, const HalfPlane& h) {
  if (c.vertices.empty()) return std::nullopt;
  if (c.degenerate()) return clip_degenerate(c, std::span<const HalfPlane>(&h, 1));
  auto r = clip_ring(polygon_ring(c), h);
  if (r.empty()) return std::nullopt;
  return ring_to_polygon(r);
}

std::optional<ConvexPolygon> convex_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.vertices.empty() || b.vertices.empty()) return std::nullopt;
  if (a.degenerate() && b.degenerate()) {
    if (a.vertices.size() == 1) {
      if (b.contains(a.vertices[0])) return a;
      return std::nullopt;
    }
    if (b.vertices.size() == 1) {
      if (a.contains(b.vertices[0])) return b;
      return std::nullopt;
    }
    auto x = intersect_segments({a.vertices[0], a.vertices[1]}, {b.vertices[0], b.vertices[1]});
    if (x.kind == SegmentIntersection::Kind::None) return std::nullopt;
    if (x.kind == SegmentIntersection::Kind::Point) return ConvexPolygon{{x.p}};
    return ConvexPolygon{{x.p, x.q}};
  }
  if (a.degenerate()) return clip_degenerate(a, b.halfplanes());
  if (b.degenerate()) return clip_degenerate(b, a.halfplanes());
  auto ring = polygon_ring(a);
  for (const auto& h : b.halfplanes()) {
    if (ring.size() < 3) {
      auto rest = ring_to_polygon(ring);
      return clip_degenerate(rest, b.halfplanes());
    }
    ring = clip_ring(ring, h);
    if (ring.empty()) return std::nullopt;
  }
  return ring_to_polygon(ring);
}

ConvexPolygon box_polygon(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
  return {{Point2{x0, y0}, Point2{x1, y0}, Point2{x1, y1}, Point2{x0, y1}}};
}

HalfPlaneResult halfplane_intersect(std::span<const HalfPlane> hs, const std::optional<BBox>& bounds) {
  for (const auto& h : hs)
    if (h.nx == 0 && h.ny == 0) throw GeometryError(ErrorCode::InvalidArgument, "half-plane with zero normal");
  if (hs.empty()) return {HalfPlaneResult::Kind::Unbounded, {}};

  // Bounded iff the normals positively span the plane.
  std::vector<Point2> normals;
  for (const auto& h : hs) normals.push_back({h.nx, h.ny});
  const Point2 ref{1, 0};
  std::sort(normals.begin(), normals.end(), [&](const Point2& a, const Point2& b) { return angle_less_from(ref, a, b); });
  std::vector<Point2> dirs;
  for (auto& n : normals)
    if (dirs.empty() || !same_direction(dirs.back(), n)) dirs.push_back(n);
  if (dirs.size() > 1 && same_direction(dirs.front(), dirs.back())) dirs.pop_back();
  bool bounded = dirs.size() >= 3;
  for (std::size_t i = 0; bounded && i < dirs.size(); ++i)
    if (sgn(cross(dirs[i], dirs[(i + 1) % dirs.size()])) <= 0) bounded = false;

  ConvexPolygon box;
  if (bounded && bounds) {
    const Rational pad = 1 + (bounds->xmax - bounds->xmin) + (bounds->ymax - bounds->ymin);
    box = box_polygon(bounds->xmin - pad, bounds->ymin - pad, bounds->xmax + pad, bounds->ymax + pad);
  } else {
    // Every nonempty intersection has a point no farther out than a pairwise
    // line intersection or the foot of a perpendicular from the origin.
    double reach = 1;
    for (const auto& h : hs) {
      const double nn = std::hypot(h.nx.get_d(), h.ny.get_d());
      reach = std::max(reach, std::fabs(h.offset.get_d()) / nn);
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        const Rational det = hs[i].nx * hs[j].ny - hs[i].ny * hs[j].nx;
        if (det == 0) continue;
        const Point2 p = line_meet(hs[i], hs[j]);
        reach = std::max({reach, std::fabs(p.x.get_d()), std::fabs(p.y.get_d())});
      }
    }
    const Rational r = Rational(std::ceil(2 * reach + 1));
    box = box_polygon(-r, -r, r, r);
  }
  auto ring = polygon_ring(box);
  for (const auto& h : hs) {
    if (ring.size() < 3) break;
    ring = clip_ring(ring, h);
    if (ring.empty()) return {HalfPlaneResult::Kind::Empty, {}};
  }
  std::optional<ConvexPolygon> poly = ring_to_polygon(ring);
  if (poly->degenerate()) poly = clip_degenerate(*poly, hs);
  if (!poly) return {HalfPlaneResult::Kind::Empty, {}};
  if (!bounded) return {HalfPlaneResult::Kind::Unbounded, *poly};
  return {HalfPlaneResult::Kind::Bounded, *poly};
}

ConvexPolygon minkowski_sum_convex(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.vertices.empty() || b.vertices.empty()) throw GeometryError(ErrorCode::EmptyInput, "Minkowski sum of empty polygon");
  if (a.degenerate() || b.degenerate()) {
    std::vector<Point2> sums;
    for (const auto& p : a.vertices)
      for (const auto& q : b.vertices) sums.push_back(p + q);
    return convex_hull(sums);
  }
  auto lowest = [](const std::vector<Point2>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].y < v[k].y || (v[i].y == v[k].y && v[i].x < v[k].x)) k = i;
    return k;
  };
  const auto& A = a.vertices;
  const auto& B = b.vertices;
  const std::size_t n = A.size(), m = B.size();
  std::size_t i = lowest(A), j = lowest(B), ci = 0, cj = 0;
  std::vector<Point2> out;
  out.reserve(n + m);
  while (ci < n || cj < m) {
    out.push_back(A[i % n] + B[j % m]);
    const Point2 ea = A[(i + 1) % n] - A[i % n];
    const Point2 eb = B[(j + 1) % m] - B[j % m];
    int c = 0;
    if (ci == n) c = -1;
    else if (cj == m) c = 1;
    else c = sgn(cross(ea, eb));
    if (c >= 0) { ++i; ++ci; }
    if (c <= 0) { ++j; ++cj; }
  }
  return convex_hull(out);
}

Rational support(const ConvexPolygon& c, const Point2& u) {
  if (c.vertices.empty()) throw GeometryError(ErrorCode::EmptyInput, "support of empty polygon");
  Rational best = dot(c.vertices[0], u);
  for (const auto& p : c.vertices) {
    Rational v = dot(p, u);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace krasno
