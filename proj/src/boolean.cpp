#include "krasno/boolean.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "krasno/detail/edge_index.hpp"

namespace krasno {

using detail::DP;
using detail::EdgeIndex;
using detail::orient_f;
using detail::to_dp;

namespace {

using EdgeList = std::vector<std::pair<Point2, Point2>>;
using Pred = std::function<bool(const int* windings)>;

struct InEdge {
  Point2 a, b;
  int input;
  DP da, db;
  double xmin, xmax, ymin, ymax;
  std::vector<Point2> splits;
};

void add_intersections(InEdge& s, InEdge& t) {
  const int o1 = orient_f(s.a, s.b, t.a, s.da, s.db, t.da);
  const int o2 = orient_f(s.a, s.b, t.b, s.da, s.db, t.db);
  if (o1 * o2 > 0) return;
  const int o3 = orient_f(t.a, t.b, s.a, t.da, t.db, s.da);
  const int o4 = orient_f(t.a, t.b, s.b, t.da, t.db, s.db);
  if (o3 * o4 > 0) return;
  if (o1 == 0 && o2 == 0) {
    const Point2& slo = std::min(s.a, s.b);
    const Point2& shi = std::max(s.a, s.b);
    const Point2& tlo = std::min(t.a, t.b);
    const Point2& thi = std::max(t.a, t.b);
    const Point2& lo = std::max(slo, tlo);
    const Point2& hi = std::min(shi, thi);
    if (hi < lo) return;
    s.splits.push_back(lo);
    t.splits.push_back(lo);
    if (lo != hi) {
      s.splits.push_back(hi);
      t.splits.push_back(hi);
    }
    return;
  }
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
    if (o1 == 0) s.splits.push_back(t.a);
    if (o2 == 0) s.splits.push_back(t.b);
    if (o3 == 0) t.splits.push_back(s.a);
    if (o4 == 0) t.splits.push_back(s.b);
    return;
  }
  const Point2 d = s.b - s.a, e = t.b - t.a;
  const Rational tp = cross(t.a - s.a, e) / cross(d, e);
  Point2 x{s.a.x + tp * d.x, s.a.y + tp * d.y};
  s.splits.push_back(x);
  t.splits.push_back(std::move(x));
}

Location ring_locate(const Ring& ring, const Point2& p) {
  Region r{{PolygonWithHoles{ring, {}}}};
  return locate(r, p);
}

bool ring_less(const Ring& a, const Ring& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

// Assemble canonical polygons-with-holes from closed loops (interior on the left).
Region assemble(std::vector<Ring> loops) {
  std::vector<Ring> outers, holes;
  std::vector<Rational> outer_area;
  for (auto& l : loops) {
    Ring r = drop_collinear(l);
    if (r.size() < 3) continue;
    Rational a2 = signed_area2(r);
    const int s = sgn(a2);
    if (s == 0) continue;
    r = canonical_rotation(std::move(r));
    if (s > 0) {
      outers.push_back(std::move(r));
      outer_area.push_back(std::move(a2));
    } else {
      holes.push_back(std::move(r));
    }
  }
  std::vector<std::size_t> order(outers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return outer_area[i] < outer_area[j]; });
  std::vector<BBox> boxes;
  for (const auto& o : outers) boxes.push_back(bbox_of(o));

  std::vector<std::vector<Ring>> assigned(outers.size());
  for (auto& h : holes) {
    bool placed = false;
    for (std::size_t oi : order) {
      const BBox& bb = boxes[oi];
      const BBox hb = bbox_of(h);
      if (hb.xmin < bb.xmin || hb.xmax > bb.xmax || hb.ymin < bb.ymin || hb.ymax > bb.ymax) continue;
      Location loc = Location::Boundary;
      for (std::size_t i = 0; i < h.size() && loc == Location::Boundary; ++i) {
        const Point2 mid = Rational(1, 2) * (h[i] + h[(i + 1) % h.size()]);
        loc = ring_locate(outers[oi], mid);
      }
      if (loc == Location::Inside) {
        assigned[oi].push_back(std::move(h));
        placed = true;
        break;
      }
    }
    if (!placed) throw GeometryError(ErrorCode::InvalidPolygon, "boolean: hole without enclosing boundary");
  }
  Region out;
  for (std::size_t i = 0; i < outers.size(); ++i) {
    std::sort(assigned[i].begin(), assigned[i].end(), ring_less);
    out.components.push_back(PolygonWithHoles{std::move(outers[i]), std::move(assigned[i])});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const PolygonWithHoles& a, const PolygonWithHoles& b) { return ring_less(a.outer, b.outer); });
  return out;
}

Region overlay(const std::vector<EdgeList>& inputs, const Pred& inside) {
  const int K = static_cast<int>(inputs.size());
  std::vector<InEdge> es;
  for (int k = 0; k < K; ++k) {
    for (const auto& [a, b] : inputs[k]) {
      if (a == b) continue;
      InEdge e{a, b, k, to_dp(a), to_dp(b), 0, 0, 0, 0, {}};
      e.xmin = std::min(e.da.x, e.db.x);
      e.xmax = std::max(e.da.x, e.db.x);
      e.ymin = std::min(e.da.y, e.db.y);
      e.ymax = std::max(e.da.y, e.db.y);
      es.push_back(std::move(e));
    }
  }
  if (es.empty()) return {};

  // Pairwise intersections, swept in x.
  std::vector<int> order(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return es[i].xmin < es[j].xmin; });
  std::vector<int> active;
  for (int idx : order) {
    InEdge& e = es[idx];
    const double sx = 1e-9 * (1 + std::fabs(e.xmin));
    std::erase_if(active, [&](int j) { return es[j].xmax < e.xmin - sx; });
    for (int j : active) {
      InEdge& f = es[j];
      const double sy = 1e-9 * (1 + std::fabs(e.ymin) + std::fabs(e.ymax));
      if (f.ymax < e.ymin - sy || f.ymin > e.ymax + sy) continue;
      add_intersections(e, f);
    }
    active.push_back(idx);
  }

  // Vertex ids in lexicographic order.
  std::vector<Point2> pts;
  for (auto& e : es) {
    e.splits.push_back(e.a);
    e.splits.push_back(e.b);
    std::sort(e.splits.begin(), e.splits.end());
    e.splits.erase(std::unique(e.splits.begin(), e.splits.end()), e.splits.end());
    pts.insert(pts.end(), e.splits.begin(), e.splits.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto id_of = [&](const Point2& p) {
    return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
  };

  // Undirected subedges with per-input signed multiplicity.
  struct Sub {
    int u, v;
  };
  std::vector<Sub> subs;
  std::vector<int> mult;
  std::unordered_map<std::uint64_t, int> key_to_sub;
  for (const auto& e : es) {
    const int sign = e.a < e.b ? 1 : -1;
    std::vector<int> ids;
    ids.reserve(e.splits.size());
    for (const auto& p : e.splits) ids.push_back(id_of(p));
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      const std::uint64_t key = (static_cast<std::uint64_t>(ids[i]) << 32) | static_cast<std::uint32_t>(ids[i + 1]);
      auto [it, fresh] = key_to_sub.try_emplace(key, static_cast<int>(subs.size()));
      if (fresh) {
        subs.push_back({ids[i], ids[i + 1]});
        mult.resize(mult.size() + K, 0);
      }
      mult[static_cast<std::size_t>(it->second) * K + e.input] += sign;
    }
  }

  std::vector<EdgeIndex> index;
  index.reserve(K);
  for (int k = 0; k < K; ++k) index.emplace_back(inputs[k]);

  struct Directed {
    int from, to;
  };
  std::vector<Directed> kept;
  std::vector<int> wl(K), wr(K);
  for (std::size_t s = 0; s < subs.size(); ++s) {
    const Point2& a = pts[subs[s].u];
    const Point2& b = pts[subs[s].v];
    const Point2 mid = Rational(1, 2) * (a + b);
    const Point2 n = perp(b - a);
    for (int k = 0; k < K; ++k) {
      wl[k] = index[k].winding_perturbed(mid, n);
      wr[k] = wl[k] - mult[s * K + k];
    }
    const bool left = inside(wl.data()), right = inside(wr.data());
    if (left == right) continue;
    if (left)
      kept.push_back({subs[s].u, subs[s].v});
    else
      kept.push_back({subs[s].v, subs[s].u});
  }
  if (kept.empty()) return {};

  // Trace loops, turning as far clockwise as possible at every vertex.
  std::vector<std::vector<int>> out(pts.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out[kept[i].from].push_back(static_cast<int>(i));
  std::vector<Point2> dir(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) dir[i] = pts[kept[i].to] - pts[kept[i].from];
  std::vector<char> used(kept.size(), 0);

  auto next_edge = [&](int e) {
    const int v = kept[e].to;
    const auto& cand = out[v];
    if (cand.size() == 1) return cand[0];
    const Point2 ref = -dir[e];
    int best = -1;
    for (int c : cand)
      if (best < 0 || angle_less_from(ref, dir[best], dir[c])) best = c;
    return best;
  };

  std::vector<Ring> loops;
  for (std::size_t start = 0; start < kept.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> seq;
    int e = static_cast<int>(start);
    bool ok = true;
    while (!used[e]) {
      used[e] = 1;
      seq.push_back(kept[e].from);
      const int nx = next_edge(e);
      if (nx < 0) {
        ok = false;
        break;
      }
      e = nx;
    }
    if (!ok || e != static_cast<int>(start))
      throw GeometryError(ErrorCode::InvalidPolygon, "boolean: boundary tracing failed");
    // Split at repeated vertices.
    std::unordered_map<int, std::size_t> pos;
    std::vector<int> stack;
    for (int v : seq) {
      auto it = pos.find(v);
      if (it != pos.end()) {
        Ring loop;
        for (std::size_t i = it->second; i < stack.size(); ++i) {
          loop.push_back(pts[stack[i]]);
          if (i > it->second) pos.erase(stack[i]);
        }
        loops.push_back(std::move(loop));
        stack.resize(it->second + 1);
        continue;
      }
      pos[v] = stack.size();
      stack.push_back(v);
    }
    Ring loop;
    for (int v : stack) loop.push_back(pts[v]);
    loops.push_back(std::move(loop));
  }
  return assemble(std::move(loops));
}

}  // namespace

Region region_boolean(BoolOp op, const Region& a, const Region& b) {
  Pred p;
  switch (op) {
    case BoolOp::Union: p = [](const int* w) { return w[0] != 0 || w[1] != 0; }; break;
    case BoolOp::Intersection: p = [](const int* w) { return w[0] != 0 && w[1] != 0; }; break;
    case BoolOp::Difference: p = [](const int* w) { return w[0] != 0 && w[1] == 0; }; break;
    case BoolOp::Xor: p = [](const int* w) { return (w[0] != 0) != (w[1] != 0); }; break;
  }
  if (op == BoolOp::Intersection && (a.empty() || b.empty())) return {};
  if (op == BoolOp::Difference && a.empty()) return {};
  return overlay({a.directed_edges(), b.directed_edges()}, p);
}

Region region_union_all(std::vector<Region> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<Region> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(region_union(parts[i], parts[i + 1]));
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return canonicalize(parts[0]);
}

Region resolve_nonzero(const std::vector<Ring>& rings) {
  EdgeList edges;
  for (const auto& r : rings)
    for (std::size_t i = 0; i < r.size(); ++i) edges.emplace_back(r[i], r[(i + 1) % r.size()]);
  return overlay({edges}, [](const int* w) { return w[0] != 0; });
}

Region canonicalize(const Region& r) {
  return overlay({r.directed_edges()}, [](const int* w) { return w[0] != 0; });
}

bool regions_equal(const Region& a, const Region& b) {
  return region_boolean(BoolOp::Xor, a, b).area() == 0;
}

bool region_contains(const Region& a, const Region& b) {
  return region_boolean(BoolOp::Difference, b, a).area() == 0;
}

}  // namespace krasno
