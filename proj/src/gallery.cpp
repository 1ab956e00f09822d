#include "krasno/gallery.hpp"

#include <algorithm>

namespace krasno {

bool SkeletalGallery::contains(const Point2& p) const {
  for (const auto& s : segments)
    if (on_segment(s.a, s.b, p)) return true;
  return false;
}

std::vector<Point2> SkeletalGallery::endpoints() const {
  std::vector<Point2> out;
  for (const auto& s : segments) {
    out.push_back(s.a);
    out.push_back(s.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Gallery Gallery::polygonal(Region r) {
  if (r.empty()) throw GeometryError(ErrorCode::InvalidPolygon, "empty polygonal gallery");
  Gallery g;
  g.kind = Kind::Polygonal;
  g.region = std::move(r);
  return g;
}

Gallery Gallery::skeletal(std::vector<Segment2> segments) {
  if (segments.empty()) throw GeometryError(ErrorCode::EmptyInput, "skeletal gallery without segments");
  for (const auto& s : segments)
    if (s.degenerate()) throw GeometryError(ErrorCode::InvalidArgument, "degenerate segment in skeletal gallery");
  Gallery g;
  g.kind = Kind::Skeletal;
  g.skeleton.segments = std::move(segments);
  return g;
}

bool Gallery::contains(const Point2& p) const {
  if (kind == Kind::Skeletal) return skeleton.contains(p);
  return locate(region, p) != Location::Outside;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  // False when a and b were already joined (a cycle).
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int point_id(std::vector<Point2>& pts, const Point2& p) {
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  return static_cast<int>(it - pts.begin());
}

}  // namespace

bool Gallery::simply_connected() const {
  if (kind == Kind::Polygonal) {
    // Components may only touch at points, and the touching pattern must be a tree.
    const int n = static_cast<int>(region.components.size());
    for (const auto& c : region.components)
      if (!c.holes.empty()) return false;
    if (n == 1) return true;
    std::vector<std::pair<Point2, int>> incidences;
    for (int i = 0; i < n; ++i) {
      Ring r = region.components[i].outer;
      std::sort(r.begin(), r.end());
      r.erase(std::unique(r.begin(), r.end()), r.end());
      for (auto& p : r) incidences.emplace_back(std::move(p), i);
    }
    std::sort(incidences.begin(), incidences.end());
    DisjointSets ds(n);
    int joins = 0;
    for (std::size_t i = 0; i < incidences.size();) {
      std::size_t j = i + 1;
      while (j < incidences.size() && incidences[j].first == incidences[i].first) ++j;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (!ds.join(incidences[i].second, incidences[k].second)) return false;
        ++joins;
      }
      i = j;
    }
    return joins == n - 1;
  }
  // Skeletal: the segment arrangement must be a tree.
  const auto& segs = skeleton.segments;
  std::vector<std::vector<Point2>> on(segs.size());
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    on[i].push_back(segs[i].a);
    on[i].push_back(segs[i].b);
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      auto x = intersect_segments(segs[i], segs[j]);
      if (x.kind == SegmentIntersection::Kind::None) continue;
      for (const Point2* p : {&x.p, &x.q}) {
        on[i].push_back(*p);
        on[j].push_back(*p);
        if (x.kind == SegmentIntersection::Kind::Point) break;
      }
    }
  std::vector<std::pair<Point2, Point2>> edges;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto& v = on[i];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (std::size_t k = 0; k + 1 < v.size(); ++k) edges.emplace_back(v[k], v[k + 1]);
    pts.insert(pts.end(), v.begin(), v.end());
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  DisjointSets ds(static_cast<int>(pts.size()));
  int joins = 0;
  for (const auto& [a, b] : edges) {
    if (!ds.join(point_id(pts, a), point_id(pts, b))) return false;
    ++joins;
  }
  return joins == static_cast<int>(pts.size()) - 1;
}

std::vector<Point2> Gallery::vertices() const {
  if (kind == Kind::Skeletal) return skeleton.endpoints();
  return region.vertices();
}

BBox Gallery::bbox() const {
  if (kind == Kind::Skeletal) {
    auto e = skeleton.endpoints();
    return bbox_of(e);
  }
  return region.bbox();
}

}  // namespace krasno
