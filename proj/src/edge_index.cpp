#include "krasno/detail/edge_index.hpp"

#include <algorithm>
#include <cmath>

namespace krasno::detail {

EdgeIndex::EdgeIndex(const std::vector<std::pair<Point2, Point2>>& edges) {
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    Edge e{a, b, to_dp(a), to_dp(b), 0, 0, 0, 0};
    e.xmin = std::min(e.da.x, e.db.x);
    e.xmax = std::max(e.da.x, e.db.x);
    e.ymin = std::min(e.da.y, e.db.y);
    e.ymax = std::max(e.da.y, e.db.y);
    edges_.push_back(std::move(e));
  }
  if (edges_.empty()) return;
  double lo = edges_[0].ymin, hi = edges_[0].ymax;
  for (const auto& e : edges_) {
    lo = std::min(lo, e.ymin);
    hi = std::max(hi, e.ymax);
  }
  const double pad = 1e-9 * (1 + std::fabs(lo) + std::fabs(hi));
  lo -= pad;
  hi += pad;
  const std::size_t nb = std::clamp<std::size_t>(edges_.size() / 2, 1, 4096);
  y0_ = lo;
  inv_h_ = static_cast<double>(nb) / (hi - lo);
  buckets_.assign(nb, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const double s = 1e-9 * (1 + std::fabs(e.ymin) + std::fabs(e.ymax));
    auto b0 = static_cast<long>(std::floor((e.ymin - s - y0_) * inv_h_));
    auto b1 = static_cast<long>(std::floor((e.ymax + s - y0_) * inv_h_));
    b0 = std::clamp<long>(b0, 0, static_cast<long>(nb) - 1);
    b1 = std::clamp<long>(b1, 0, static_cast<long>(nb) - 1);
    for (long b = b0; b <= b1; ++b) buckets_[b].push_back(static_cast<int>(i));
  }
}

const std::vector<int>* EdgeIndex::bucket_for(double y) const {
  if (buckets_.empty()) return nullptr;
  const double f = (y - y0_) * inv_h_;
  if (!(f >= 0) || f >= static_cast<double>(buckets_.size())) return nullptr;
  return &buckets_[static_cast<std::size_t>(f)];
}

namespace {

bool point_on_edge(const EdgeIndex::Edge& e, const Point2& p, DP dp) {
  const double s = 1e-9 * (1 + std::fabs(dp.x) + std::fabs(dp.y));
  if (dp.x < e.xmin - s || dp.x > e.xmax + s || dp.y < e.ymin - s || dp.y > e.ymax + s) return false;
  if (orient_f(e.a, e.b, p, e.da, e.db, dp) != 0) return false;
  return p.x >= std::min(e.a.x, e.b.x) && p.x <= std::max(e.a.x, e.b.x) && p.y >= std::min(e.a.y, e.b.y) &&
         p.y <= std::max(e.a.y, e.b.y);
}

}  // namespace

Location EdgeIndex::locate(const Point2& p) const {
  const DP dp = to_dp(p);
  const auto* bucket = bucket_for(dp.y);
  if (!bucket) return Location::Outside;
  for (int i : *bucket)
    if (point_on_edge(edges_[i], p, dp)) return Location::Boundary;
  return winding_perturbed(p, Point2{0, 0}) != 0 ? Location::Inside : Location::Outside;
}

Location EdgeIndex::locate_perturbed(const Point2& p, const Point2& d) const {
  if (sgn(d.x) == 0 && sgn(d.y) == 0) return locate(p);
  const DP dp = to_dp(p);
  const auto* bucket = bucket_for(dp.y);
  if (!bucket) {
    // p is outside the y-range; only a horizontal slack miss is possible here.
    return Location::Outside;
  }
  for (int i : *bucket) {
    const auto& e = edges_[i];
    if (!point_on_edge(e, p, dp)) continue;
    const Point2 u = e.b - e.a;
    if (sgn(cross(u, d)) != 0) continue;
    const bool forward = sgn(dot(u, d)) > 0;
    if (p == e.b && forward) continue;
    if (p == e.a && !forward) continue;
    return Location::Boundary;
  }
  return winding_perturbed(p, d) != 0 ? Location::Inside : Location::Outside;
}

int EdgeIndex::winding_perturbed(const Point2& p, const Point2& d) const {
  const DP dp = to_dp(p);
  const auto* bucket = bucket_for(dp.y);
  if (!bucket) return 0;
  const int dys = sgn(d.y);
  int w = 0;
  for (int i : *bucket) {
    const auto& e = edges_[i];
    // cu <= 0  <=>  a.y <= P.y
    int cu = cmp_f(e.a.y, p.y, e.da.y, dp.y);
    if (cu == 0) cu = -dys;
    int cv = cmp_f(e.b.y, p.y, e.db.y, dp.y);
    if (cv == 0) cv = -dys;
    if (cu <= 0) {
      if (cv > 0) {
        int o = orient_f(e.a, e.b, p, e.da, e.db, dp);
        if (o == 0) o = sgn(cross(e.b - e.a, d));
        if (o > 0) ++w;
      }
    } else if (cv <= 0) {
      int o = orient_f(e.a, e.b, p, e.da, e.db, dp);
      if (o == 0) o = sgn(cross(e.b - e.a, d));
      if (o < 0) --w;
    }
  }
  return w;
}

std::vector<Point2> EdgeIndex::edges_through(const Point2& p) const {
  std::vector<Point2> out;
  const DP dp = to_dp(p);
  const auto* bucket = bucket_for(dp.y);
  if (!bucket) return out;
  for (int i : *bucket) {
    const auto& e = edges_[i];
    if (!point_on_edge(e, p, dp)) continue;
    if (p != e.b) out.push_back(e.b - p);
    if (p != e.a) out.push_back(e.a - p);
  }
  return out;
}

}  // namespace krasno::detail
