#pragma once

#include <vector>

#include "krasno/geometry.hpp"

namespace krasno {

enum class BoolOp { Union, Intersection, Difference, Xor };

/// Exact boolean operation on closed regions. The result is canonical: rings
/// start at their lexicographically smallest vertex, straight-run vertices are
/// removed, zero-area pieces are dropped and components are sorted.
Region region_boolean(BoolOp op, const Region& a, const Region& b);

inline Region region_union(const Region& a, const Region& b) { return region_boolean(BoolOp::Union, a, b); }
inline Region region_intersection(const Region& a, const Region& b) {
  return region_boolean(BoolOp::Intersection, a, b);
}
inline Region region_difference(const Region& a, const Region& b) {
  return region_boolean(BoolOp::Difference, a, b);
}

/// Union of many regions (balanced pairwise merging).
Region region_union_all(std::vector<Region> parts);

/// Points with nonzero winding number with respect to the given closed rings,
/// which may self-intersect, overlap or contain spikes.
Region resolve_nonzero(const std::vector<Ring>& rings);

/// Canonical form of a region (equivalent to a union with the empty region).
Region canonicalize(const Region& r);

/// Set equality of closed regions up to measure zero.
bool regions_equal(const Region& a, const Region& b);

/// b is contained in a up to measure zero.
bool region_contains(const Region& a, const Region& b);

}  // namespace krasno
