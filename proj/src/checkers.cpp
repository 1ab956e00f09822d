#include "krasno/checkers.hpp"
#include "krasno/simd/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <map>
#include <random>

#include "krasno/boolean.hpp"
#include "krasno/kernel.hpp"
#include "krasno/parallel.hpp"
#include "krasno/visibility.hpp"

namespace krasno {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Consistent: return "CONSISTENT";
    case Classification::Vacuous: return "VACUOUS";
    case Classification::TheoremViolationCandidate: return "THEOREM_VIOLATION_CANDIDATE";
    case Classification::ConsistentWithClaim: return "CONSISTENT_WITH_CLAIM";
  }
  return "?";
}

namespace {
constexpr std::pair<WitnessFamily, const char*> kFamilies[] = {
    {WitnessFamily::None, "none"},           {WitnessFamily::BoxVolume, "box-volume"},
    {WitnessFamily::BoxSum, "box-sum"},      {WitnessFamily::Disc, "disc"},
    {WitnessFamily::Ellipse, "ellipse"},     {WitnessFamily::VWidth, "vwidth-segment"},
    {WitnessFamily::NormSegment, "norm-segment"}, {WitnessFamily::RegionArea, "region-area"},
};
}  // namespace

const char* to_string(WitnessFamily f) {
  for (const auto& [k, name] : kFamilies)
    if (k == f) return name;
  return "?";
}

std::optional<WitnessFamily> parse_family(std::string_view s) {
  for (const auto& [k, name] : kFamilies)
    if (s == name) return k;
  return std::nullopt;
}

bool CandidateSet::add(const Point2& p, std::string tag) {
  if (std::find(points.begin(), points.end(), p) != points.end()) return false;
  points.push_back(p);
  tags.push_back(std::move(tag));
  return true;
}

CandidateSet default_candidates(const Gallery& K, int random_count, std::uint64_t seed, const std::vector<Point2>& extra,
                                const std::string& extra_tag) {
  CandidateSet C;
  std::vector<std::pair<Point2, Point2>> edges;
  if (K.is_polygonal()) {
    edges = K.region.directed_edges();
  } else {
    for (const auto& s : K.skeleton.segments) edges.emplace_back(s.a, s.b);
  }
  for (const auto& v : K.vertices()) C.add(v, "vertex");
  const Rational half(1, 2);
  for (const auto& [a, b] : edges) C.add(half * (a + b), "edge-midpoint");
  std::mt19937_64 rng(seed);
  const std::string rtag = "random(" + std::to_string(seed) + ")";
  if (random_count > 0 && !edges.empty()) {
    if (K.is_polygonal()) {
      const BBox bb = K.bbox();
      std::uniform_real_distribution<double> X(to_double(bb.xmin), to_double(bb.xmax)),
          Y(to_double(bb.ymin), to_double(bb.ymax));
      std::vector<double> x0, y0, x1, y1;
      for (const auto& [a, b] : edges) {
        x0.push_back(to_double(a.x));
        y0.push_back(to_double(a.y));
        x1.push_back(to_double(b.x));
        y1.push_back(to_double(b.y));
      }
      // float parity prefilter in batches, exact location decides
      constexpr std::size_t B = 32;
      std::vector<Point2> batch(B);
      std::vector<double> qx(B), qy(B);
      std::vector<std::uint8_t> in(B);
      int got = 0;
      for (long tries = 0; got < random_count && tries < 1000L * random_count; tries += B) {
        for (std::size_t j = 0; j < B; ++j) {
          batch[j] = Point2(snap_dyadic(X(rng), 12), snap_dyadic(Y(rng), 12));
          qx[j] = to_double(batch[j].x);
          qy[j] = to_double(batch[j].y);
        }
        simd::parity_inside(x0.data(), y0.data(), x1.data(), y1.data(), x0.size(), qx.data(), qy.data(), B, in.data());
        for (std::size_t j = 0; j < B && got < random_count; ++j)
          if (in[j] && locate(K.region, batch[j]) == Location::Inside && C.add(batch[j], rtag)) ++got;
      }
    } else {
      std::uniform_int_distribution<std::size_t> S(0, edges.size() - 1);
      std::uniform_int_distribution<int> T(1, 1023);
      int got = 0;
      for (long tries = 0; got < random_count && tries < 1000L * random_count; ++tries) {
        const auto& [a, b] = edges[S(rng)];
        const Rational t(T(rng), 1024);
        if (C.add(a + t * (b - a), rtag)) ++got;
      }
    }
  }
  for (const auto& p : extra) {
    if (!K.contains(p)) throw GeometryError(ErrorCode::NotInGallery, "candidate " + format_point(p) + " is outside the gallery");
    C.add(p, extra_tag);
  }
  return C;
}

int default_k(const CheckConfig& cfg) {
  if (cfg.k > 0) return cfg.k;
  switch (cfg.family) {
    case WitnessFamily::None: return 3;
    case WitnessFamily::BoxVolume: return 4;
    case WitnessFamily::BoxSum: return 4;
    case WitnessFamily::Disc: return 3;
    case WitnessFamily::Ellipse: return 5;
    case WitnessFamily::VWidth: return 4;
    case WitnessFamily::NormSegment: return static_cast<int>(cfg.norm.normals.size()) * 2;
    case WitnessFamily::RegionArea: return 5;
  }
  return 3;
}

double guaranteed_threshold(const CheckConfig& cfg) {
  if (cfg.conclusion_threshold >= 0) return cfg.conclusion_threshold;
  // Arbitrary sets of area t only guarantee t / d^d in the kernel.
  return cfg.family == WitnessFamily::RegionArea ? cfg.threshold / 4 : cfg.threshold;
}

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  if (r >= static_cast<long double>(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::llround(r));
}

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

// Measures `family` inside R and decides admission at threshold t.
struct Measured {
  bool admits = false;
  Witness w;
};

Measured measure(const Region& R, const CheckConfig& cfg, double t, bool convex_hint, bool want_measure) {
  Measured out;
  out.w.family = cfg.family;
  if (R.empty()) return out;
  switch (cfg.family) {
    case WitnessFamily::None: break;
    case WitnessFamily::BoxVolume: {
      if (auto b = contains_box_of_area(R, t, convex_hint, cfg.inscribe)) {
        out.admits = true;
        out.w.box = b;
        out.w.measure = to_double(b->area());
      }
      if (want_measure)
        if (auto b = largest_box(R, convex_hint, cfg.inscribe); b && to_double(b->area()) > out.w.measure) {
          out.w.measure = to_double(b->area());
          if (!out.admits) out.w.box = b;
        }
      break;
    }
    case WitnessFamily::BoxSum: {
      if (auto b = contains_box_of_axis_sum(R, t, convex_hint, cfg.inscribe)) {
        out.admits = true;
        out.w.box = b;
        out.w.measure = to_double(b->w + b->h);
      }
      break;
    }
    case WitnessFamily::Disc: {
      if (auto d = largest_disc(R, convex_hint, cfg.inscribe)) {
        out.w.measure = d->radius;
        if (d->radius >= t) {
          Disc certified{d->center, t};
          out.admits = disc_in_region(certified, R);
          out.w.disc = certified;
        } else {
          out.w.disc = d;
        }
      }
      break;
    }
    case WitnessFamily::Ellipse: {
      if (auto e = largest_ellipse(R, convex_hint, cfg.inscribe)) {
        out.w.measure = e->area();
        if (e->area() >= t && t > 0) {
          Ellipse certified = *e;
          certified.A *= std::sqrt(t / e->area());
          out.admits = ellipse_in_region(certified, R);
          out.w.ellipse = certified;
        } else {
          out.w.ellipse = e;
        }
      }
      break;
    }
    case WitnessFamily::VWidth: {
      auto s = longest_vwidth_segment(R, cfg.direction, convex_hint);
      out.w.segment = s;
      out.w.measure = s.measure;
      out.w.resolution_limited = s.resolution_limited;
      out.admits = s.measure >= t;
      break;
    }
    case WitnessFamily::NormSegment: {
      auto s = longest_norm_segment(R, cfg.norm, convex_hint);
      out.w.segment = s;
      out.w.measure = s.measure;
      out.w.resolution_limited = s.resolution_limited;
      out.admits = s.measure >= t;
      break;
    }
    case WitnessFamily::RegionArea: {
      const Rational a = R.area();
      out.w.measure = to_double(a);
      out.admits = a >= rationalize(t, 1'000'000'000);
      break;
    }
  }
  return out;
}

// Depth-first tuple search. Level j picks among choices(j, prefix); the area
// part of the common visibility is intersected along the way.
struct TupleSearch {
  const PreparedGallery& PK;
  const std::vector<VisibilityRegion>& V;
  std::size_t depth = 0;
  std::function<std::vector<std::size_t>(std::size_t, const std::vector<std::size_t>&)> choices;
  std::function<void(std::vector<std::size_t>&)> pad;  // lexicographically smallest completion
  std::function<bool(const Region&)> region_ok;         // quantitative leaf test (empty: viewer test)

  bool viewer_exists(const std::vector<std::size_t>& ids, const Region& area) const {
    if (!area.empty()) return true;
    std::vector<const VisibilityRegion*> ptrs;
    for (auto i : ids) ptrs.push_back(&V[i]);
    return common_viewer_of(PK, ptrs, area).has_value();
  }

  bool leaf_ok(const std::vector<std::size_t>& ids, const Region& area) const {
    return region_ok ? region_ok(area) : viewer_exists(ids, area);
  }

  bool dead(const std::vector<std::size_t>& ids, const Region& area) const {
    if (!area.empty()) return false;
    if (region_ok) return !region_ok(area);
    return !viewer_exists(ids, area);
  }

  struct Branch {
    std::size_t checked = 0;
    std::optional<std::vector<std::size_t>> violation;
  };

  // Returns true to stop.
  bool dfs(std::vector<std::size_t>& ids, const Region& area, std::size_t limit, Branch& out) const {
    const std::size_t level = ids.size();
    for (auto c : choices(level, ids)) {
      ids.push_back(c);
      Region next = level == 0 ? V[c].region : region_intersection(area, V[c].region);
      if (ids.size() == depth) {
        ++out.checked;
        if (!leaf_ok(ids, next)) {
          out.violation = ids;
          return true;
        }
        if (out.checked >= limit) return true;
      } else if (dead(ids, next)) {
        ++out.checked;
        auto full = ids;
        pad(full);
        out.violation = full;
        return true;
      } else if (dfs(ids, next, limit, out)) {
        return true;
      }
      ids.pop_back();
    }
    return false;
  }

  // Runs the first-level choices in parallel with per-branch tuple limits.
  void run(const std::vector<std::size_t>& branch_sizes, std::size_t cap, TheoremReport& rep) const {
    const auto roots = choices(0, {});
    std::vector<std::size_t> limit(roots.size(), 0);
    std::size_t used = 0;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      limit[b] = std::min(branch_sizes[b], cap - std::min(cap, used));
      used = sat_add(used, branch_sizes[b]);
    }
    std::vector<Branch> res(roots.size());
    std::atomic<std::size_t> best{roots.size()};
    parallel_for(roots.size(), [&](std::size_t b) {
      if (limit[b] == 0 || b > best.load()) return;
      std::vector<std::size_t> ids{roots[b]};
      Region area = V[roots[b]].region;
      if (depth == 1) {
        ++res[b].checked;
        if (!leaf_ok(ids, area)) res[b].violation = ids;
      } else if (dead(ids, area)) {
        ++res[b].checked;
        pad(ids);
        res[b].violation = ids;
      } else {
        dfs(ids, area, limit[b], res[b]);
      }
      if (res[b].violation) {
        std::size_t cur = best.load();
        while (b < cur && !best.compare_exchange_weak(cur, b)) {
        }
      }
    });
    rep.tuples_checked = 0;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      rep.tuples_checked += res[b].checked;
      if (res[b].violation) {
        rep.hypothesis_holds = false;
        rep.violating_indices = *res[b].violation;
        break;
      }
    }
    rep.truncated = rep.hypothesis_holds && rep.tuples_checked < rep.tuples_total;
    rep.coverage = rep.tuples_total == 0 ? 1.0 : static_cast<double>(rep.tuples_checked) / static_cast<double>(rep.tuples_total);
    if (!rep.hypothesis_holds) rep.coverage = 1;
  }
};

std::vector<VisibilityRegion> visibility_all(const PreparedGallery& PK, const std::vector<Point2>& pts) {
  std::vector<VisibilityRegion> V(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { V[i] = PK.visibility(pts[i]); });
  return V;
}

void require_members(const Gallery& K, const std::vector<Point2>& pts) {
  for (const auto& p : pts)
    if (!K.contains(p)) throw GeometryError(ErrorCode::NotInGallery, "candidate " + format_point(p) + " is outside the gallery");
}

// Combinations of `k` out of `n` in lexicographic order.
void run_combinations(TupleSearch& S, std::size_t n, std::size_t k, std::size_t cap, TheoremReport& rep) {
  S.depth = k;
  S.choices = [n, k](std::size_t level, const std::vector<std::size_t>& ids) {
    std::vector<std::size_t> out;
    const std::size_t lo = level == 0 ? 0 : ids.back() + 1;
    for (std::size_t c = lo; c + (k - level) <= n; ++c) out.push_back(c);
    return out;
  };
  S.pad = [k](std::vector<std::size_t>& ids) {
    while (ids.size() < k) ids.push_back(ids.back() + 1);
  };
  rep.tuples_total = binom(n, k);
  std::vector<std::size_t> sizes;
  for (std::size_t c = 0; c + k <= n; ++c) sizes.push_back(binom(n - 1 - c, k - 1));
  S.run(sizes, cap, rep);
}

void classify(TheoremReport& rep, bool in_scope) {
  if (rep.conclusion_holds) rep.classification = Classification::Consistent;
  else if (!rep.hypothesis_holds) rep.classification = Classification::Vacuous;
  else rep.classification = in_scope ? Classification::TheoremViolationCandidate : Classification::ConsistentWithClaim;
}

// Vertices where two boundary chains meet.
void note_pinches(const Gallery& K, TheoremReport& rep) {
  if (!K.is_polygonal()) return;
  std::map<Point2, int> seen;
  for (const auto& c : K.region.components) {
    for (const auto& v : c.outer) ++seen[v];
    for (const auto& h : c.holes)
      for (const auto& v : h) ++seen[v];
  }
  std::size_t n = 0;
  for (const auto& [v, k] : seen) n += k > 1;
  if (n) rep.notes.push_back("gallery has " + std::to_string(n) + " pinch point(s); visibility through them is closed containment");
}

bool is_simple_polygon(const Gallery& K) {
  return K.is_polygonal() && K.region.components.size() == 1 && K.region.components[0].holes.empty();
}

}  // namespace

TheoremReport check_classic(const Gallery& K, const CandidateSet& C, const CheckConfig& cfg) {
  TheoremReport rep;
  rep.theorem = "classic";
  rep.family = WitnessFamily::None;
  const std::size_t k = static_cast<std::size_t>(std::max(1, cfg.k > 0 ? cfg.k : 3));
  rep.k = static_cast<int>(k);
  rep.candidates = C.size();
  require_members(K, C.points);
  PreparedGallery PK(K);
  const auto V = visibility_all(PK, C.points);
  TupleSearch S{PK, V, 0, {}, {}, {}};
  run_combinations(S, C.size(), std::min(k, C.size()), cfg.cap, rep);
  for (auto i : rep.violating_indices) rep.violating_tuple.push_back(C.points[i]);

  bool limited = false;
  if (auto x = find_kernel_point(K, cfg.grid_resolution, &limited)) {
    rep.conclusion_holds = true;
    rep.witness.point = x;
  }
  rep.witness.resolution_limited = limited;
  rep.resolution_limited = limited;
  if (limited) rep.notes.push_back("kernel search is grid-limited for this gallery");
  if (rep.truncated) rep.notes.push_back("tuple enumeration truncated at the cap");
  note_pinches(K, rep);
  classify(rep, true);
  return rep;
}

namespace {

TheoremReport colorful(const Gallery& K, const std::vector<ColorClass>& classes, const CheckConfig& cfg,
                       const std::string& name, bool in_scope) {
  if (classes.size() < 2) throw GeometryError(ErrorCode::InvalidArgument, "colorful checks need at least two classes");
  TheoremReport rep;
  rep.theorem = name;
  rep.family = cfg.family;
  rep.threshold = cfg.threshold;
  rep.conclusion_threshold = guaranteed_threshold(cfg);
  rep.k = static_cast<int>(classes.size());
  std::vector<Point2> pts;
  std::vector<std::size_t> start;
  for (const auto& c : classes) {
    if (c.points.empty()) throw GeometryError(ErrorCode::InvalidArgument, "empty color class " + c.name);
    start.push_back(pts.size());
    pts.insert(pts.end(), c.points.begin(), c.points.end());
  }
  start.push_back(pts.size());
  rep.candidates = pts.size();
  require_members(K, pts);
  PreparedGallery PK(K);
  const auto V = visibility_all(PK, pts);
  const bool quant = cfg.family != WitnessFamily::None;
  const double hyp_t = cfg.threshold - cfg.tolerance;

  TupleSearch S{PK, V, 0, {}, {}, {}};
  S.depth = classes.size();
  S.choices = [&](std::size_t level, const std::vector<std::size_t>&) {
    std::vector<std::size_t> out;
    for (std::size_t i = start[level]; i < start[level + 1]; ++i) out.push_back(i);
    return out;
  };
  S.pad = [&](std::vector<std::size_t>& ids) {
    while (ids.size() < classes.size()) ids.push_back(start[ids.size()]);
  };
  if (quant) S.region_ok = [&](const Region& R) { return measure(R, cfg, hyp_t, false, false).admits; };
  rep.tuples_total = 1;
  for (const auto& c : classes) rep.tuples_total = sat_mul(rep.tuples_total, c.points.size());
  std::vector<std::size_t> sizes(classes[0].points.size(), rep.tuples_total / classes[0].points.size());
  S.run(sizes, cfg.cap, rep);
  for (auto i : rep.violating_indices) rep.violating_tuple.push_back(pts[i]);
  // Report tuple positions within each class.
  for (std::size_t j = 0; j < rep.violating_indices.size(); ++j) rep.violating_indices[j] -= start[j];

  for (std::size_t c = 0; c < classes.size(); ++c) {
    Region area = V[start[c]].region;
    std::vector<std::size_t> ids{start[c]};
    for (std::size_t i = start[c] + 1; i < start[c + 1]; ++i) {
      area = region_intersection(area, V[i].region);
      ids.push_back(i);
    }
    bool ok = false;
    if (quant) {
      auto m = measure(area, cfg, rep.conclusion_threshold, false, false);
      ok = m.admits;
      if (ok && !rep.conclusion_holds) rep.witness = m.w;
    } else {
      ok = S.viewer_exists(ids, area);
      if (ok && !rep.conclusion_holds) {
        std::vector<const VisibilityRegion*> ptrs;
        for (auto i : ids) ptrs.push_back(&V[i]);
        rep.witness.point = common_viewer_of(PK, ptrs, area);
      }
    }
    if (ok) {
      rep.satisfied_classes.push_back(classes[c].name);
      rep.conclusion_holds = true;
    }
  }
  if (rep.truncated) rep.notes.push_back("tuple enumeration truncated at the cap");
  if (!in_scope) rep.notes.push_back("outside the theorem's scope: a failed conclusion is not a violation");
  note_pinches(K, rep);
  classify(rep, in_scope);
  return rep;
}

}  // namespace

TheoremReport check_colorful_plane(const Gallery& K, const std::vector<ColorClass>& classes, const CheckConfig& cfg) {
  // Two classes run as the optimality control: outside the theorem's scope.
  if (classes.size() != 2 && classes.size() != 3)
    throw GeometryError(ErrorCode::InvalidArgument, "the planar colorful check takes three classes (or two as a control)");
  if (K.is_polygonal()) {
    for (const auto& c : K.region.components)
      if (!c.holes.empty()) throw GeometryError(ErrorCode::NotSimplyConnected, "gallery has holes");
    if (!K.simply_connected())
      throw GeometryError(ErrorCode::NotSimplyConnected, "gallery components touch in a cycle");
  }
  CheckConfig c = cfg;
  c.family = WitnessFamily::None;
  return colorful(K, classes, c, "colorful-plane", classes.size() == 3 && (K.is_polygonal() || K.simply_connected()));
}

TheoremReport check_colorful_general(const Gallery& K, const std::vector<ColorClass>& classes, const CheckConfig& cfg) {
  const bool in_scope = cfg.family == WitnessFamily::None && classes.size() == 3 && K.simply_connected();
  return colorful(K, classes, cfg, "colorful-general", in_scope);
}

TheoremReport check_quantitative(const Gallery& K, const CandidateSet& C, const CheckConfig& cfg) {
  if (cfg.family == WitnessFamily::None) throw GeometryError(ErrorCode::InvalidArgument, "quantitative check needs a witness family");
  if (!(cfg.threshold > 0)) throw GeometryError(ErrorCode::InvalidArgument, "threshold must be positive");
  if (cfg.family == WitnessFamily::NormSegment) cfg.norm.validate();
  TheoremReport rep;
  rep.theorem = "quantitative";
  rep.family = cfg.family;
  rep.threshold = cfg.threshold;
  rep.conclusion_threshold = guaranteed_threshold(cfg);
  const std::size_t k = static_cast<std::size_t>(default_k(cfg));
  rep.k = static_cast<int>(k);
  rep.candidates = C.size();
  require_members(K, C.points);
  PreparedGallery PK(K);
  const auto V = visibility_all(PK, C.points);
  const double hyp_t = cfg.threshold - cfg.tolerance;
  std::atomic<bool> limited{false};
  TupleSearch S{PK, V, 0, {}, {}, {}};
  S.region_ok = [&](const Region& R) {
    auto m = measure(R, cfg, hyp_t, false, false);
    if (m.w.resolution_limited) limited = true;
    return m.admits;
  };
  run_combinations(S, C.size(), std::min(k, C.size()), cfg.cap, rep);
  for (auto i : rep.violating_indices) rep.violating_tuple.push_back(C.points[i]);

  Region ker;
  bool exact = is_simple_polygon(K);
  if (exact) {
    auto kk = kernel_simple(SimplePolygon::make(K.region.components[0].outer));
    if (!kk.empty) ker = kk.region.to_region();
  } else if (K.is_polygonal()) {
    ker = common_visibility(K, K.vertices());
    rep.notes.push_back("kernel replaced by the common visibility of all vertices (a superset)");
  } else {
    rep.notes.push_back("skeletal gallery: no two-dimensional kernel");
  }
  auto m = measure(ker, cfg, rep.conclusion_threshold, exact, true);
  rep.conclusion_holds = m.admits;
  rep.witness = m.w;
  rep.kernel_measure = m.w.measure;
  if (cfg.family == WitnessFamily::RegionArea) rep.kernel_measure = to_double(ker.area());
  rep.resolution_limited = limited || m.w.resolution_limited || (!exact && K.is_polygonal());
  if (rep.conclusion_holds && rep.kernel_measure < cfg.threshold && cfg.family == WitnessFamily::RegionArea)
    rep.notes.push_back("kernel area is below the hypothesis threshold");
  if (rep.truncated) rep.notes.push_back("tuple enumeration truncated at the cap");
  note_pinches(K, rep);
  classify(rep, true);
  // A superset kernel can only err towards a false "holds".
  if (!exact && rep.classification == Classification::Consistent && K.is_polygonal())
    rep.notes.push_back("conclusion verdict is qualified by the kernel superset");
  return rep;
}

std::vector<FuzzResult> search_counterexample(const FuzzSpec& spec, const CheckConfig& cfg, int budget) {
  if (budget <= 0) throw GeometryError(ErrorCode::InvalidArgument, "budget must be positive");
  if (spec.min_vertices < 3 || spec.max_vertices < spec.min_vertices)
    throw GeometryError(ErrorCode::InvalidArgument, "bad vertex range");
  if (spec.generator == GeneratorKind::SimpleEmptyKernel && spec.max_vertices < 8)
    throw GeometryError(ErrorCode::InvalidArgument, "empty kernels need at least 8 vertices");
  std::vector<FuzzResult> out;
  for (int i = 0; i < budget; ++i) {
    const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
    const int n = spec.min_vertices + static_cast<int>(seed % static_cast<std::uint64_t>(spec.max_vertices - spec.min_vertices + 1));
    SimplePolygon P;
    switch (spec.generator) {
      case GeneratorKind::Star: P = gen_star(seed, n); break;
      case GeneratorKind::Simple: P = gen_simple(seed, n); break;
      case GeneratorKind::SimpleEmptyKernel: {
        // Five or fewer vertices are always star-shaped; six rarely fail.
        const int m = std::max(n, 8);
        bool found = false;
        for (std::uint64_t j = 0; j < 100000 && !found; ++j) {
          P = gen_simple(seed * 1000003 + j, m);
          found = kernel_simple(P).empty;
        }
        if (!found) throw GeometryError(ErrorCode::ResamplingExhausted, "no empty-kernel polygon for seed " + std::to_string(seed));
        break;
      }
    }
    const Gallery K = Gallery::polygonal(P);
    const CandidateSet C = default_candidates(K, spec.random_candidates, seed);
    FuzzResult r{seed, static_cast<int>(P.size()), P, {}};
    if (spec.colorful) {
      std::vector<ColorClass> cls{{"P1", {}}, {"P2", {}}, {"P3", {}}};
      for (std::size_t j = 0; j < C.size(); ++j) cls[j % 3].points.push_back(C.points[j]);
      r.report = check_colorful_plane(K, cls, cfg);
    } else {
      r.report = check_classic(K, C, cfg);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace krasno
