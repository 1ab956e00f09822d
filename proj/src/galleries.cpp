#include "krasno/galleries.hpp"
#include "krasno/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "krasno/boolean.hpp"
#include "krasno/error.hpp"
#include "krasno/visibility.hpp"

namespace krasno {

namespace {

Point2 pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

}  // namespace

ColoredGallery gen_fig1() {
  Ring r{pt("6", "4"), pt("7", "6"), pt("10", "0"), pt("12", "6"), pt("13", "4"), pt("12", "3"), pt("9", "4.5"), pt("7", "3")};
  ColoredGallery g{Gallery::polygonal(resolve_nonzero({r})), {}, {}};
  g.classes.push_back({"red", {pt("7", "6"), pt("12", "3")}});
  g.classes.push_back({"blue", {pt("7", "3"), pt("12", "6")}});
  g.classes.push_back({"black", {pt("6", "4"), pt("10", "0"), pt("9", "4.5"), pt("13", "4")}});
  g.metadata["generator"] = "fig1";
  return g;
}

ColoredGallery gen_spider() {
  const Point2 r1 = pt("6", "4"), r2 = pt("3", "2"), g1 = pt("4", "3.5"), g2 = pt("7", "1"), b1 = pt("6", "3"),
               b2 = pt("2", "0");
  struct Viewer {
    Point2 p;
    Point2 t[3];
  };
  // viewer 4i + 2j + k sees (r_i, g_j, b_k)
  const Viewer vs[8] = {
      {pt("5", "3.1"), {g1, b1, r1}},   {pt("1", "5"), {g1, r1, b2}},   {pt("7", "2"), {b1, r1, g2}},
      {pt("9", "0"), {g2, r1, b2}},     {pt("4.5", "2.8"), {g1, b1, r2}}, {pt("2", "3"), {g1, r2, b2}},
      {pt("5.5", "2"), {b1, r2, g2}},   {pt("5", "1"), {g2, r2, b2}},
  };
  std::vector<Segment2> segs;
  std::vector<Point2> viewers;
  for (const auto& v : vs) {
    viewers.push_back(v.p);
    for (const auto& t : v.t) segs.push_back({v.p, t});
  }
  ColoredGallery g{Gallery::skeletal(std::move(segs)), {}, {}};
  g.classes.push_back({"r", {r1, r2}});
  g.classes.push_back({"g", {g1, g2}});
  g.classes.push_back({"b", {b1, b2}});
  g.classes.push_back({"viewers", viewers});
  g.metadata["generator"] = "spider";
  return g;
}

ColoredGallery gen_claim22(int n, const std::vector<int>& class_sizes, std::uint64_t seed, int max_attempts) {
  if (n < 2 || static_cast<int>(class_sizes.size()) != n)
    throw GeometryError(ErrorCode::InvalidArgument, "claim22: need n >= 2 class sizes");
  for (int s : class_sizes)
    if (s < 3) throw GeometryError(ErrorCode::InvalidArgument, "claim22: every class needs at least 3 points");
  std::size_t tuples = 1;
  for (int s : class_sizes) tuples *= static_cast<std::size_t>(s);
  if (tuples > 4096) throw GeometryError(ErrorCode::InvalidArgument, "claim22: too many colorful tuples");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> U(0, 100000);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Point2> all;
    auto draw = [&]() {
      for (int tries = 0; tries < 1000; ++tries) {
        Point2 p(U(rng), U(rng));
        bool ok = true;
        for (std::size_t i = 0; i < all.size() && ok; ++i) {
          if (all[i] == p) ok = false;
          for (std::size_t j = i + 1; j < all.size() && ok; ++j)
            if (orient(all[i], all[j], p) == 0) ok = false;
        }
        if (ok) {
          all.push_back(p);
          return true;
        }
      }
      return false;
    };
    bool ok = true;
    std::size_t total = tuples;
    for (int s : class_sizes) total += s;
    while (ok && all.size() < total) ok = draw();
    if (!ok) continue;
    std::vector<std::vector<Point2>> cls(n);
    std::size_t at = 0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < class_sizes[i]; ++k) cls[i].push_back(all[at++]);
    std::vector<Point2> guards(all.begin() + static_cast<long>(at), all.end());
    // Segment t*n + i joins guard t to coordinate i of tuple t.
    std::vector<Segment2> segs;
    std::vector<std::pair<int, int>> ends;  // (class point id, guard id)
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t rest = t;
      std::vector<int> idx(n);
      for (int i = n - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(rest % class_sizes[i]);
        rest /= class_sizes[i];
      }
      int base = 0;
      for (int i = 0; i < n; ++i) {
        segs.push_back({cls[i][idx[i]], guards[t]});
        ends.emplace_back(base + idx[i], static_cast<int>(t));
        base += class_sizes[i];
      }
    }
    // No point common to three segments with pairwise disjoint endpoints.
    std::vector<std::pair<Point2, int>> hits;
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (ends[i].first == ends[j].first || ends[i].second == ends[j].second) continue;
        auto x = intersect_segments(segs[i], segs[j]);
        if (x.kind == SegmentIntersection::Kind::None) continue;
        hits.emplace_back(x.p, static_cast<int>(i));
        hits.emplace_back(x.p, static_cast<int>(j));
      }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    bool concurrent = false;
    for (std::size_t i = 0; i < hits.size() && !concurrent;) {
      std::size_t j = i;
      while (j < hits.size() && hits[j].first == hits[i].first) ++j;
      for (std::size_t a = i; a < j && !concurrent; ++a)
        for (std::size_t b = a + 1; b < j && !concurrent; ++b)
          for (std::size_t c = b + 1; c < j && !concurrent; ++c) {
            const auto& A = ends[hits[a].second];
            const auto& B = ends[hits[b].second];
            const auto& C = ends[hits[c].second];
            auto disjoint = [](const auto& p, const auto& q) { return p.first != q.first && p.second != q.second; };
            concurrent = disjoint(A, B) && disjoint(A, C) && disjoint(B, C);
          }
      i = j;
    }
    if (concurrent) continue;
    ColoredGallery g{Gallery::skeletal(std::move(segs)), {}, {}};
    for (int i = 0; i < n; ++i) g.classes.push_back({"F" + std::to_string(i + 1), cls[i]});
    g.classes.push_back({"guards", guards});
    g.metadata["generator"] = "claim22";
    g.metadata["seed"] = std::to_string(seed);
    g.metadata["attempt"] = std::to_string(attempt);
    return g;
  }
  throw GeometryError(ErrorCode::ResamplingExhausted, "claim22: resampling budget exhausted for seed " + std::to_string(seed));
}

Claim22Report verify_claim22(const ColoredGallery& g) {
  if (g.gallery.is_polygonal()) throw GeometryError(ErrorCode::InvalidArgument, "claim22 galleries are skeletal");
  const auto& S = g.gallery.skeleton;
  std::vector<const ColorClass*> classes;
  const ColorClass* guards = nullptr;
  for (const auto& c : g.classes) {
    if (c.name == "guards") guards = &c;
    else classes.push_back(&c);
  }
  if (!guards) throw GeometryError(ErrorCode::InvalidArgument, "claim22 gallery without guards");
  Claim22Report rep;
  const std::size_t n = classes.size();
  for (std::size_t t = 0; t < guards->points.size(); ++t) {
    std::size_t rest = t;
    for (std::size_t i = n; i-- > 0;) {
      const auto& pts = classes[i]->points;
      const Point2& x = pts[rest % pts.size()];
      rest /= pts.size();
      if (!skeletal_sees(S, guards->points[t], x)) rep.tuples_seen = false;
    }
  }
  std::vector<Point2> cand = S.endpoints();
  for (std::size_t i = 0; i < S.segments.size(); ++i)
    for (std::size_t j = i + 1; j < S.segments.size(); ++j) {
      auto x = intersect_segments(S.segments[i], S.segments[j]);
      if (x.kind == SegmentIntersection::Kind::None) continue;
      cand.push_back(x.p);
      if (x.kind == SegmentIntersection::Kind::Overlap) cand.push_back(x.q);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  rep.candidates = cand.size();
  for (const auto& c : cand)
    for (const auto* cl : classes) {
      int seen = 0;
      for (const auto& x : cl->points) seen += skeletal_sees(S, c, x);
      rep.max_seen_per_class = std::max(rep.max_seen_per_class, seen);
    }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

ConvexPolygon regular_polygon(double radius, int k) {
  std::vector<Point2> pts;
  for (int j = 0; j < k; ++j) {
    const double t = 2 * std::numbers::pi * j / k;
    pts.push_back({snap_dyadic(radius * std::cos(t)), snap_dyadic(radius * std::sin(t))});
  }
  return convex_hull(pts);
}

struct DV {
  double x, y;
};

double cross_d(DV o, DV a, DV b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

std::vector<DV> to_dv(const ConvexPolygon& c) {
  std::vector<DV> out;
  for (const auto& p : c.vertices) out.push_back({to_double(p.x), to_double(p.y)});
  return out;
}

// Keep the part left of a -> b.
std::vector<DV> clip_left(const std::vector<DV>& poly, DV a, DV b) {
  std::vector<DV> out;
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const DV p = poly[i], q = poly[(i + 1) % k];
    const double fp = cross_d(a, b, p), fq = cross_d(a, b, q);
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

double area_d(const std::vector<DV>& p) {
  std::vector<double> x(p.size()), y(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) x[i] = p[i].x, y[i] = p[i].y;
  return 0.5 * simd::shoelace2(x.data(), y.data(), p.size());
}

struct ApproxModel {
  std::vector<DV> unit, big;

  explicit ApproxModel(const SpikeModel& S) : unit(to_dv(S.unit_disc)), big(to_dv(S.big_disc)) {}

  // Tangent points (right, left) seen from the apex.
  std::pair<DV, DV> tangents(DV a) const {
    DV r = unit[0], l = unit[0];
    for (const auto& q : unit) {
      if (cross_d(a, r, q) < 0) r = q;
      if (cross_d(a, l, q) > 0) l = q;
    }
    return {r, l};
  }

  std::vector<DV> clip_cone(std::vector<DV> poly, double M, double theta) const {
    const DV a{M * std::cos(theta), M * std::sin(theta)};
    const auto [r, l] = tangents(a);
    poly = clip_left(poly, a, r);
    if (poly.empty()) return poly;
    return clip_left(poly, l, a);
  }
};

double f_approx(const ApproxModel& A, const SpikeModel& S, const std::vector<double>& th) {
  std::vector<DV> poly = A.big;
  for (double t : th) {
    poly = A.clip_cone(std::move(poly), S.M, t);
    if (poly.size() < 3) return 0;
  }
  return area_d(poly);
}

// Nelder-Mead minimisation on angles.
std::pair<double, std::vector<double>> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                                   std::vector<double> x0, double step, int iters) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> val(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  for (std::size_t i = 0; i <= n; ++i) val[i] = f(pts[i]);
  for (int it = 0; it < iters; ++it) {
    std::vector<std::size_t> ord(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](auto a, auto b) { return val[a] < val[b]; });
    const std::size_t best = ord[0], worst = ord[n], second = ord[n - 1];
    if (std::abs(val[worst] - val[best]) < 1e-13) break;
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) c[k] += pts[i][k] / n;
    auto along = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = c[k] + t * (pts[worst][k] - c[k]);
      return p;
    };
    auto xr = along(-1);
    const double fr = f(xr);
    if (fr < val[best]) {
      auto xe = along(-2);
      const double fe = f(xe);
      if (fe < fr) pts[worst] = xe, val[worst] = fe;
      else pts[worst] = xr, val[worst] = fr;
    } else if (fr < val[second]) {
      pts[worst] = xr, val[worst] = fr;
    } else {
      auto xc = along(0.5);
      const double fc = f(xc);
      if (fc < val[worst]) {
        pts[worst] = xc, val[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i)
          if (i != best) {
            for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            val[i] = f(pts[i]);
          }
      }
    }
  }
  std::size_t b = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (val[i] < val[b]) b = i;
  return {val[b], pts[b]};
}

std::vector<double> spaced(int N) {
  std::vector<double> t(N);
  for (int j = 0; j < N; ++j) t[j] = 2 * std::numbers::pi * j / N;
  return t;
}

// Intersection of the cones (clipped to a box well beyond the disc).
std::vector<DV> cap_approx(const ApproxModel& A, const SpikeModel& S, const std::vector<double>& th) {
  const double R = 4 * S.M;
  std::vector<DV> poly{{-R, -R}, {R, -R}, {R, R}, {-R, R}};
  for (double t : th) {
    poly = A.clip_cone(std::move(poly), S.M, t);
    if (poly.size() < 3) break;
  }
  return poly;
}

std::optional<ConvexPolygon> cap_exact(const SpikeModel& S, const std::vector<double>& th) {
  const Rational R(static_cast<long>(std::ceil(4 * S.M)));
  std::optional<ConvexPolygon> poly = box_polygon(-R, -R, R, R);
  for (double t : th)
    for (const auto& h : S.cone(S.apex(t))) {
      poly = clip_convex(*poly, h);
      if (!poly) return poly;
    }
  return poly;
}

template <class F>
void for_each_subset(int N, int k, F f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > N) return;
  for (;;) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == N - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SpikeModel SpikeModel::make(double M, double Mp, int disc_verts) {
  const double rho = 1 / std::sqrt(std::numbers::pi);
  if (!(Mp < M) || !(Mp > rho)) throw GeometryError(ErrorCode::InvalidArgument, "spiked gallery needs 1/sqrt(pi) < M' < M");
  if (disc_verts < 8) throw GeometryError(ErrorCode::InvalidArgument, "disc polygon needs at least 8 vertices");
  SpikeModel S;
  S.M = M;
  S.Mp = Mp;
  S.disc_verts = disc_verts;
  const double k = disc_verts;
  const double r1 = std::sqrt(2 / (k * std::sin(2 * std::numbers::pi / k)));
  S.unit_disc = regular_polygon(r1, disc_verts);
  S.big_disc = regular_polygon(Mp, disc_verts);
  return S;
}

Point2 SpikeModel::apex(double theta) const { return {snap_dyadic(M * std::cos(theta)), snap_dyadic(M * std::sin(theta))}; }

std::vector<HalfPlane> SpikeModel::cone(const Point2& a) const {
  const auto& U = unit_disc.vertices;
  Point2 r = U[0], l = U[0];
  for (const auto& q : U) {
    if (orient(a, r, q) < 0) r = q;
    if (orient(a, l, q) > 0) l = q;
  }
  return {HalfPlane::left_of(a, r), HalfPlane::left_of(l, a)};
}

Rational f_volume(const SpikeModel& S, const std::vector<double>& thetas) {
  std::optional<ConvexPolygon> poly = S.big_disc;
  for (double t : thetas)
    for (const auto& h : S.cone(S.apex(t))) {
      poly = clip_convex(*poly, h);
      if (!poly) return 0;
    }
  return poly->area();
}

double f_volume_approx(const SpikeModel& S, const std::vector<double>& thetas) {
  ApproxModel A(S);
  return f_approx(A, S, thetas);
}

MEstimate estimate_m(const SpikeModel& S, int n, MStrategy strategy, int budget, std::uint64_t seed) {
  if (n < 1 || budget < 1) throw GeometryError(ErrorCode::InvalidArgument, "estimate_m: need n >= 1 and budget >= 1");
  ApproxModel A(S);
  std::function<double(const std::vector<double>&)> f = [&](const std::vector<double>& th) { return f_approx(A, S, th); };
  MEstimate best;
  best.m = INFINITY;
  auto consider = [&](double v, const std::vector<double>& th) {
    if (v < best.m) best.m = v, best.thetas = th;
  };
  if (strategy == MStrategy::Grid) {
    // The first angle is pinned at zero; the rest run over a grid.
    const int free = n - 1;
    long total = 1;
    for (int i = 0; i < free; ++i) total = std::min<long>(total * budget, 1'000'000);
    std::vector<double> th(n, 0.0);
    for (long c = 0; c < total; ++c) {
      long r = c;
      for (int i = 1; i < n; ++i) {
        th[i] = 2 * std::numbers::pi * static_cast<double>(r % budget) / budget;
        r /= budget;
      }
      consider(f(th), th);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 2 * std::numbers::pi);
    std::vector<std::vector<double>> starts;
    std::vector<double> half(n), full(n);
    for (int i = 0; i < n; ++i) half[i] = std::numbers::pi * i / n, full[i] = 2 * std::numbers::pi * i / n;
    starts.push_back(half);
    starts.push_back(full);
    while (static_cast<int>(starts.size()) < budget) {
      std::vector<double> th(n);
      for (auto& t : th) t = U(rng);
      starts.push_back(th);
    }
    for (const auto& s0 : starts) {
      auto [v, th] = nelder_mead(f, s0, 0.3, 300);
      auto [v2, th2] = nelder_mead(f, th, 0.02, 200);
      consider(v2 < v ? v2 : v, v2 < v ? th2 : th);
    }
  }
  best.m = to_double(f_volume(S, best.thetas));
  return best;
}

SpikedGallery gen_spiked(int n, double M, double Mp, int disc_verts, std::uint64_t seed, int budget) {
  if (n < 1) throw GeometryError(ErrorCode::InvalidArgument, "spiked gallery needs n >= 1");
  const SpikeModel S = SpikeModel::make(M, Mp, disc_verts);
  ApproxModel A(S);
  MEstimate est = estimate_m(S, n, MStrategy::Multistart, budget, seed);
  double m = est.m;
  SpikedGalleryParams P;
  P.n = n;
  P.M = M;
  P.Mp = Mp;
  P.disc_verts = disc_verts;
  const double inner = Mp * std::cos(std::numbers::pi / disc_verts);
  for (int round = 0; round < 20; ++round) {
    if (!(m > 1)) throw GeometryError(ErrorCode::NonConvergence, "estimated minimum does not exceed 1");
    const double eps = 0.5 - 0.5 / m;
    const double delta = eps / (2 * (1 - 2 * eps));
    int chosen = 0;
    Rational cap_area;
    for (int N = 2; N <= 10000 && !chosen; ++N) {
      const auto th = spaced(N);
      const auto cap = cap_approx(A, S, th);
      if (cap.size() < 3) continue;
      bool inside = true;
      for (const auto& p : cap) inside = inside && std::hypot(p.x, p.y) < inner;
      if (!inside || area_d(cap) > (1 + delta) * (1 + 1e-9)) continue;
      auto ex = cap_exact(S, th);
      if (!ex || ex->area() > Rational(1 + delta)) continue;
      bool contained = true;
      for (const auto& v : ex->vertices) contained = contained && S.big_disc.contains(v);
      if (!contained) continue;
      chosen = N;
      cap_area = ex->area();
    }
    if (!chosen) throw GeometryError(ErrorCode::NoSpikeCount, "no direction count up to 10^4 meets the area bound");
    // Every n-subset of S must do at least as well as m.
    const auto th = spaced(chosen);
    double low = INFINITY;
    std::vector<double> low_th;
    for_each_subset(chosen, std::min(n, chosen), [&](const std::vector<int>& idx) {
      std::vector<double> t;
      for (int i : idx) t.push_back(th[i]);
      const double v = f_approx(A, S, t);
      if (v < low) low = v, low_th = t;
    });
    const double exact_low = to_double(f_volume(S, low_th));
    if (exact_low < m) {
      m = exact_low;
      est.thetas = low_th;
      continue;
    }
    P.m = m;
    P.epsilon = eps;
    P.delta = delta;
    P.thetas = th;
    P.cap_area = cap_area;
    break;
  }
  if (P.thetas.empty()) throw GeometryError(ErrorCode::NonConvergence, "direction set did not stabilise");

  std::vector<Region> parts{S.big_disc.to_region()};
  for (double t : P.thetas) {
    const Point2 a = S.apex(t);
    P.tips.push_back(a);
    std::vector<Point2> pts = S.unit_disc.vertices;
    pts.push_back(a);
    parts.push_back(convex_hull(pts).to_region());
  }
  Region K = region_union_all(std::move(parts));
  if (K.components.size() != 1 || !K.components[0].holes.empty())
    throw GeometryError(ErrorCode::InvalidPolygon, "spikes overlap: gallery is not a simple polygon");
  P.scale = rationalize(1 / std::sqrt(P.m), 1000000000);
  SpikedGallery out{Gallery::polygonal(K), Gallery::polygonal(scale_region(K, P.scale)), P};
  return out;
}

// ---------------------------------------------------------------------------

SimplePolygon gen_star(std::uint64_t seed, int n, double irregularity) {
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "gen_star needs at least 3 vertices");
  irregularity = std::clamp(irregularity, 0.0, 0.95);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-0.5, 0.5), R(0, 1);
  const double step = 2 * std::numbers::pi / n;
  for (;;) {
    std::vector<double> ang(n);
    for (int i = 0; i < n; ++i) ang[i] = i * step + irregularity * step * U(rng);
    bool gaps = true;
    for (int i = 0; i < n; ++i) {
      const double g = (i + 1 < n ? ang[i + 1] : ang[0] + 2 * std::numbers::pi) - ang[i];
      gaps = gaps && g > 0 && g < 0.95 * std::numbers::pi;
    }
    if (!gaps) continue;
    Ring ring;
    for (int i = 0; i < n; ++i) {
      const double r = 1000 * (1 - 0.8 * irregularity * R(rng));
      ring.push_back(Point2(std::lround(r * std::cos(ang[i])), std::lround(r * std::sin(ang[i]))));
    }
    const Point2 o(0, 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = orient(ring[i], ring[(i + 1) % n], o) > 0;
    if (!ok) continue;
    try {
      return SimplePolygon::make(ring);
    } catch (const GeometryError&) {
    }
  }
}

SimplePolygon gen_simple(std::uint64_t seed, int n) {
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "gen_simple needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> U(0, 1000);
  Ring pts;
  while (static_cast<int>(pts.size()) < n) {
    Point2 p(U(rng), U(rng));
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      ok = !(pts[i] == p);
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) ok = orient(pts[i], pts[j], p) != 0;
    }
    if (ok) pts.push_back(p);
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  // 2-opt: uncross until simple; the perimeter drops with every reversal.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n && !changed; ++i)
      for (int j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        const Segment2 a{pts[i], pts[i + 1]}, b{pts[j], pts[(j + 1) % n]};
        if (intersect_segments(a, b).kind == SegmentIntersection::Kind::None) continue;
        std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
        changed = true;
      }
  }
  return SimplePolygon::make(pts);
}

}  // namespace krasno
