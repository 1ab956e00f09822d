#pragma once

#include <utility>
#include <vector>

#include "krasno/detail/predicates.hpp"
#include "krasno/geometry.hpp"

namespace krasno::detail {

// Directed boundary edges bucketed by y, for repeated exact point location.
class EdgeIndex {
 public:
  struct Edge {
    Point2 a, b;
    DP da, db;
    double xmin, xmax, ymin, ymax;
  };

  EdgeIndex() = default;
  explicit EdgeIndex(const std::vector<std::pair<Point2, Point2>>& edges);
  explicit EdgeIndex(const Region& r) : EdgeIndex(r.directed_edges()) {}

  Location locate(const Point2& p) const;

  // Location of p + eps * d for an infinitesimal eps > 0 (d may be zero).
  Location locate_perturbed(const Point2& p, const Point2& d) const;

  // Winding number of p + eps * d. The perturbed point must not lie on an edge.
  int winding_perturbed(const Point2& p, const Point2& d) const;

  // Directions of the boundary rays leaving p (one per incident edge end, two
  // when p is interior to an edge). Unnormalised, may repeat.
  std::vector<Point2> edges_through(const Point2& p) const;

  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

 private:
  const std::vector<int>* bucket_for(double y) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> buckets_;
  double y0_ = 0, inv_h_ = 0;
};

}  // namespace krasno::detail
