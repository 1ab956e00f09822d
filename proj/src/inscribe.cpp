#include "krasno/inscribe.hpp"
#include "krasno/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "krasno/boolean.hpp"
#include "krasno/error.hpp"
#include "krasno/gallery.hpp"
#include "krasno/visibility.hpp"

namespace krasno {

namespace {

// max c.x s.t. A x <= b, x >= 0, with b >= 0 (origin feasible). Dense tableau,
// Bland's rule. Returns false when unbounded.
bool simplex_max(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c, Eigen::VectorXd& x) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  T.block(0, 0, m, n) = A;
  T.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  T.block(0, n + m, m, 1) = b;
  T.block(m, 0, 1, n) = -c.transpose();
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  const double eps = 1e-12;
  for (int iter = 0; iter < 50 * (n + m); ++iter) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (T(m, j) < -eps) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = INFINITY;
    for (int i = 0; i < m; ++i)
      if (T(i, enter) > eps) {
        const double r = T(i, n + m) / T(i, enter);
        if (r < best - 1e-15 || (r <= best + 1e-15 && leave >= 0 && basis[i] < basis[leave])) {
          best = r;
          leave = i;
        }
      }
    if (leave < 0) return false;
    T.row(leave) /= T(leave, enter);
    for (int i = 0; i <= m; ++i)
      if (i != leave && T(i, enter) != 0.0) T.row(i) -= T(i, enter) * T.row(leave);
    basis[leave] = enter;
  }
  x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = std::max(0.0, T(i, n + m));
  return true;
}

struct DPoly {
  std::vector<Eigen::Vector2d> v;
  std::vector<Eigen::Vector2d> n;  // unit outward normals
  std::vector<double> b;           // n.p <= b
};

DPoly to_dpoly(const ConvexPolygon& C) {
  DPoly d;
  for (const auto& p : C.vertices) d.v.emplace_back(to_double(p.x), to_double(p.y));
  const std::size_t k = d.v.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::Vector2d e = d.v[(i + 1) % k] - d.v[i];
    Eigen::Vector2d nn(e.y(), -e.x());
    const double len = nn.norm();
    if (len == 0) continue;
    nn /= len;
    d.n.push_back(nn);
    d.b.push_back(nn.dot(d.v[i]));
  }
  return d;
}

Eigen::Vector2d vertex_mean(const DPoly& d) {
  Eigen::Vector2d s = Eigen::Vector2d::Zero();
  for (const auto& p : d.v) s += p;
  return s / static_cast<double>(d.v.size());
}

// Vertical extent of a convex polygon at abscissa x.
std::pair<double, double> column(const DPoly& d, double x) {
  double lo = INFINITY, hi = -INFINITY;
  const std::size_t k = d.v.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = d.v[i];
    const auto& q = d.v[(i + 1) % k];
    const double x0 = std::min(p.x(), q.x()), x1 = std::max(p.x(), q.x());
    if (x < x0 || x > x1) continue;
    double y0, y1;
    if (x1 - x0 < 1e-300) {
      y0 = std::min(p.y(), q.y());
      y1 = std::max(p.y(), q.y());
    } else {
      const double t = (x - p.x()) / (q.x() - p.x());
      y0 = y1 = p.y() + t * (q.y() - p.y());
    }
    lo = std::min(lo, y0);
    hi = std::max(hi, y1);
  }
  return {lo, hi};
}

template <class F>
double golden_max(F f, double lo, double hi, int iters, double* arg) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    }
  }
  double best = f1, at = x1;
  for (double x : {lo, hi, x2})
    if (const double v = f(x); v > best) best = v, at = x;
  if (arg) *arg = at;
  return best;
}

struct BoxShape {
  DPoly d;
  double xmin, xmax, ymin, ymax;
  int iters;

  explicit BoxShape(const ConvexPolygon& C, int it) : d(to_dpoly(C)), iters(it) {
    std::vector<double> x, y;
    for (const auto& p : d.v) x.push_back(p.x()), y.push_back(p.y());
    simd::dot_minmax(x.data(), y.data(), x.size(), 1, 0, &xmin, &xmax);
    simd::dot_minmax(x.data(), y.data(), x.size(), 0, 1, &ymin, &ymax);
  }

  // Tallest box of width w (0 when w exceeds the width).
  double height(double w) const {
    if (w > xmax - xmin) return 0;
    auto h = [&](double t) {
      const auto [b0, t0] = column(d, t);
      const auto [b1, t1] = column(d, std::min(t + w, xmax));
      return std::max(0.0, std::min(t0, t1) - std::max(b0, b1));
    };
    return golden_max(h, xmin, xmax - w, iters, nullptr);
  }
};

std::optional<Box2> place_box(const ConvexPolygon& C, const Region& R, const Rational& w, const Rational& h) {
  if (w <= 0 || h <= 0) return std::nullopt;
  auto er = erode_convex_by_box(C, w, h);
  if (!er) return std::nullopt;
  Point2 anchor = *std::min_element(er->vertices.begin(), er->vertices.end());
  Box2 box{anchor, w, h};
  if (!convex_in_region(box.polygon(), R)) return std::nullopt;
  return box;
}

// Rational stand-ins for w, coarse denominators first.
std::vector<Rational> rational_candidates(double w) {
  std::vector<Rational> out;
  for (std::int64_t den : {1LL, 1000LL, 1000000LL, 1000000000LL}) {
    Rational q = rationalize(w, den);
    if (q > 0 && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

enum class BoxGoal { Area, Sum };

std::optional<Box2> box_in_piece(const ConvexPolygon& C, const Region& R, BoxGoal goal, double target,
                                 const InscribeOptions& opt) {
  if (C.degenerate()) return std::nullopt;
  BoxShape S(C, opt.refine_iters);
  const double W = S.xmax - S.xmin, H = S.ymax - S.ymin;
  if (!(W > 0 && H > 0)) return std::nullopt;
  auto F = [&](double w) { return goal == BoxGoal::Area ? w * S.height(w) : w + S.height(w); };
  double lo, hi;
  if (goal == BoxGoal::Area) {
    if (target > W * H) return std::nullopt;
    lo = std::max(target / H, W * 1e-9);
    hi = W;
  } else {
    if (target > W + H) return std::nullopt;
    lo = std::max(target - H, W * 1e-9);
    hi = std::min(W, target);
  }
  if (!(lo < hi)) lo = hi;
  // Log grid scan, then golden refinement around the best sample.
  const int N = std::max(2, opt.aspect_samples);
  std::vector<double> ws(N), fs(N);
  int best = 0;
  for (int i = 0; i < N; ++i) {
    ws[i] = lo == hi ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (N - 1));
    fs[i] = F(ws[i]);
    if (fs[i] > fs[best]) best = i;
  }
  double wstar = ws[best];
  double fstar = golden_max(F, ws[std::max(0, best - 1)], ws[std::min(N - 1, best + 1)], opt.refine_iters, &wstar);
  if (fs[best] > fstar) fstar = fs[best], wstar = ws[best];
  if (fstar < target * (1 - 1e-12)) return std::nullopt;
  // Widen to the feasible w-interval and aim for its middle.
  auto feasible = [&](double w) { return F(w) >= target; };
  auto edge = [&](double in, double out) {
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (in + out);
      (feasible(mid) ? in : out) = mid;
    }
    return in;
  };
  const double wl = feasible(lo) ? lo : edge(wstar, lo);
  const double wr = feasible(hi) ? hi : edge(wstar, hi);
  std::vector<double> tries;
  tries.push_back(goal == BoxGoal::Area ? std::sqrt(wl * wr) : 0.5 * (wl + wr));
  tries.push_back(wstar);
  const Rational tq(target);
  for (double w : tries)
    for (const auto& wq : rational_candidates(w)) {
      const Rational hq = goal == BoxGoal::Area ? Rational(tq / wq) : Rational(tq - wq);
      if (auto b = place_box(C, R, wq, hq)) return b;
    }
  return std::nullopt;
}

// Some point strictly inside a ring-with-holes component.
Point2 interior_point(const PolygonWithHoles& c) {
  std::vector<Rational> ys;
  for (const auto& p : c.outer) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t k = ys.size() / 2;
  const Rational y0 = (ys[k - 1] + ys[k]) / 2;
  std::vector<Rational> xs;
  auto scan = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto& p = r[i];
      const auto& q = r[(i + 1) % r.size()];
      if ((p.y < y0) == (q.y < y0)) continue;
      xs.push_back(p.x + (y0 - p.y) * (q.x - p.x) / (q.y - p.y));
    }
  };
  scan(c.outer);
  for (const auto& h : c.holes) scan(h);
  std::sort(xs.begin(), xs.end());
  return {(xs[0] + xs[1]) / 2, y0};
}

// Largest convex subset of V's component around the seed obtained by cutting
// every reflex vertex with one of its edge lines.
std::optional<ConvexPolygon> convex_core(const PreparedGallery& pg, const Point2& seed) {
  const VisibilityRegion V = pg.visibility(seed);
  for (const auto& comp : V.region.components) {
    Region single = Region::from_polygon(comp);
    if (locate(single, seed) == Location::Outside) continue;
    const Ring& r = comp.outer;
    const std::size_t k = r.size();
    std::vector<HalfPlane> cuts;
    for (std::size_t i = 0; i < k; ++i) {
      const Point2& a = r[(i + k - 1) % k];
      const Point2& v = r[i];
      const Point2& b = r[(i + 1) % k];
      if (orient(a, v, b) >= 0) continue;
      HalfPlane h1 = HalfPlane::left_of(a, v), h2 = HalfPlane::left_of(v, b);
      auto slack = [&](const HalfPlane& h) {
        const Rational s = h.offset - h.nx * seed.x - h.ny * seed.y;
        return Rational(s * s / (h.nx * h.nx + h.ny * h.ny));
      };
      cuts.push_back(slack(h1) >= slack(h2) ? h1 : h2);
    }
    Ring ring = r;
    if (!cuts.empty()) {
      BBox bb = single.bbox();
      bb.xmin -= 1;
      bb.ymin -= 1;
      bb.xmax += 1;
      bb.ymax += 1;
      cuts.push_back({-1, 0, -bb.xmin});
      cuts.push_back({1, 0, bb.xmax});
      cuts.push_back({0, -1, -bb.ymin});
      cuts.push_back({0, 1, bb.ymax});
      auto hp = halfplane_intersect(cuts, bb);
      if (hp.kind != HalfPlaneResult::Kind::Bounded || hp.polygon.degenerate()) return std::nullopt;
      Region core = region_intersection(single, hp.polygon.to_region());
      if (core.empty()) return std::nullopt;
      const PolygonWithHoles* pick = &core.components[0];
      for (const auto& c : core.components)
        if (locate(Region::from_polygon(c), seed) != Location::Outside) pick = &c;
      ring = pick->outer;
    }
    ConvexPolygon cp = convex_hull(ring);
    if (cp.degenerate()) return std::nullopt;
    return cp;
  }
  return std::nullopt;
}

double seg_dist(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const double dd = d.squaredNorm();
  double t = dd > 0 ? (p - a).dot(d) / dd : 0;
  t = std::clamp(t, 0.0, 1.0);
  return (a + t * d - p).norm();
}

Point2 exact_point(const Eigen::Vector2d& p) { return {Rational(p.x()), Rational(p.y())}; }

}  // namespace

ConvexPolygon Box2::polygon() const { return box_polygon(anchor.x, anchor.y, anchor.x + w, anchor.y + h); }
double Disc::area() const { return std::numbers::pi * radius * radius; }
double Ellipse::area() const { return std::numbers::pi * A.determinant(); }

std::optional<ConvexPolygon> erode_convex_by_box(const ConvexPolygon& C, const Rational& w, const Rational& h) {
  if (w <= 0 || h <= 0) throw GeometryError(ErrorCode::InvalidArgument, "box sides must be positive");
  if (C.degenerate()) return std::nullopt;
  std::vector<HalfPlane> hs;
  for (auto hp : C.halfplanes()) {
    if (hp.nx > 0) hp.offset -= hp.nx * w;
    if (hp.ny > 0) hp.offset -= hp.ny * h;
    hs.push_back(std::move(hp));
  }
  auto r = halfplane_intersect(hs, bbox_of(C.vertices));
  if (r.kind != HalfPlaneResult::Kind::Bounded) return std::nullopt;
  return r.polygon;
}

bool convex_in_region(const ConvexPolygon& P, const Region& R) {
  if (P.degenerate() || R.empty()) return false;
  Point2 c(0, 0);
  for (const auto& v : P.vertices) c = c + v;
  c = Rational(1, static_cast<long>(P.vertices.size())) * c;
  if (locate(R, c) != Location::Inside) return false;
  const auto hps = P.halfplanes();
  const BBox pb = bbox_of(P.vertices);
  const double bx0 = to_double(pb.xmin), bx1 = to_double(pb.xmax), by0 = to_double(pb.ymin), by1 = to_double(pb.ymax);
  const double pad = 1e-9 * (1 + std::abs(bx0) + std::abs(bx1) + std::abs(by0) + std::abs(by1));
  for (const auto& [a, b] : R.directed_edges()) {
    const double ax = to_double(a.x), ay = to_double(a.y), bx = to_double(b.x), by = to_double(b.y);
    if (std::max(ax, bx) < bx0 - pad || std::min(ax, bx) > bx1 + pad || std::max(ay, by) < by0 - pad ||
        std::min(ay, by) > by1 + pad)
      continue;
    Rational lo = 0, hi = 1;
    bool empty = false;
    for (const auto& h : hps) {
      const Rational fa = h.nx * a.x + h.ny * a.y - h.offset;
      const Rational fb = h.nx * b.x + h.ny * b.y - h.offset;
      if (fa > 0 && fb > 0) {
        empty = true;
        break;
      }
      if (fa <= 0 && fb <= 0) continue;
      const Rational t = fa / (fa - fb);
      if (fa > 0) {
        if (t > lo) lo = t;
      } else if (t < hi) {
        hi = t;
      }
      if (lo >= hi) {
        empty = true;
        break;
      }
    }
    if (empty || lo >= hi) continue;
    const Rational tm = (lo + hi) / 2;
    const Point2 m = a + tm * (b - a);
    bool strictly = true;
    for (const auto& h : hps)
      if (h.nx * m.x + h.ny * m.y >= h.offset) {
        strictly = false;
        break;
      }
    if (strictly) return false;
  }
  return true;
}

std::vector<ConvexPolygon> convex_pieces(const Region& R, bool convex_hint, const InscribeOptions& opt) {
  std::vector<ConvexPolygon> out;
  if (R.empty()) return out;
  if (convex_hint) {
    const auto vs = R.vertices();
    auto h = convex_hull(vs);
    if (!h.degenerate()) out.push_back(std::move(h));
    return out;
  }
  std::vector<Point2> seeds;
  for (const auto& c : R.components) seeds.push_back(interior_point(c));
  const BBox bb = R.bbox();
  const int g = std::max(1, opt.seed_grid);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      Point2 p{bb.xmin + (bb.xmax - bb.xmin) * Rational(2 * i + 1, 2 * g),
               bb.ymin + (bb.ymax - bb.ymin) * Rational(2 * j + 1, 2 * g)};
      if (locate(R, p) == Location::Inside) seeds.push_back(p);
    }
  PreparedGallery pg(Gallery::polygonal(R));
  for (const auto& s : seeds) {
    bool covered = false;
    for (const auto& c : out)
      if (c.contains(s)) {
        covered = true;
        break;
      }
    if (covered) continue;
    if (auto core = convex_core(pg, s)) out.push_back(std::move(*core));
  }
  return out;
}

std::optional<Box2> contains_box_of_area(const Region& R, double a, bool convex_hint, const InscribeOptions& opt) {
  if (!(a > 0)) throw GeometryError(ErrorCode::InvalidArgument, "box area must be positive");
  for (const auto& C : convex_pieces(R, convex_hint, opt))
    if (auto b = box_in_piece(C, R, BoxGoal::Area, a, opt)) return b;
  return std::nullopt;
}

std::optional<Box2> contains_box_of_axis_sum(const Region& R, double s, bool convex_hint, const InscribeOptions& opt) {
  if (!(s > 0)) throw GeometryError(ErrorCode::InvalidArgument, "axis sum must be positive");
  for (const auto& C : convex_pieces(R, convex_hint, opt))
    if (auto b = box_in_piece(C, R, BoxGoal::Sum, s, opt)) return b;
  return std::nullopt;
}

std::optional<Box2> largest_box(const Region& R, bool convex_hint, const InscribeOptions& opt) {
  std::optional<Box2> best;
  for (const auto& C : convex_pieces(R, convex_hint, opt)) {
    BoxShape S(C, opt.refine_iters);
    const double W = S.xmax - S.xmin;
    if (!(W > 0)) continue;
    double w = W;
    const double f = golden_max([&](double x) { return x * S.height(x); }, W * 1e-6, W, opt.refine_iters * 2, &w);
    // Back off slightly so the exact placement exists.
    for (double shrink : {1e-9, 1e-6, 1e-3}) {
      const double area = f * (1 - shrink);
      if (!(area > 0)) break;
      if (best && Rational(area) <= best->area()) break;
      const Rational wq = rationalize(w, 1000000000);
      const Rational hq = rationalize(area / to_double(wq), 1000000000);
      if (auto b = place_box(C, R, wq, hq)) {
        best = b;
        break;
      }
    }
  }
  return best;
}

Disc max_inscribed_disc(const ConvexPolygon& C) {
  if (C.degenerate()) throw GeometryError(ErrorCode::EmptyInput, "disc in a degenerate polygon");
  const DPoly d = to_dpoly(C);
  const Eigen::Vector2d p0 = vertex_mean(d);
  const int m = static_cast<int>(d.n.size());
  Eigen::MatrixXd A(m, 5);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    A.row(i) << d.n[i].x(), d.n[i].y(), -d.n[i].x(), -d.n[i].y(), 1.0;
    b[i] = std::max(0.0, d.b[i] - d.n[i].dot(p0));
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(5), x;
  c[4] = 1;
  if (!simplex_max(A, b, c, x)) throw GeometryError(ErrorCode::NonConvergence, "Chebyshev LP unbounded");
  const double r = x[4];
  Eigen::Vector2d ctr = p0 + Eigen::Vector2d(x[0] - x[2], x[1] - x[3]);
  // Lexicographic tie-break on the centre: min x, then min y, at radius r.
  const double eta = 1e-12 * std::max(1.0, r);
  for (int axis = 0; axis < 2; ++axis) {
    Eigen::MatrixXd A2(m + (axis == 1 ? 1 : 0), 4);
    Eigen::VectorXd b2(A2.rows());
    for (int i = 0; i < m; ++i) {
      A2.row(i) << d.n[i].x(), d.n[i].y(), -d.n[i].x(), -d.n[i].y();
      b2[i] = std::max(0.0, d.b[i] - d.n[i].dot(ctr) - r + eta);
    }
    if (axis == 1) {
      A2.row(m) << 1, 0, -1, 0;
      b2[m] = eta;
    }
    Eigen::VectorXd c2 = Eigen::VectorXd::Zero(4), y;
    c2[axis] = -1;  // maximise the negative move
    c2[axis + 2] = 1;
    if (simplex_max(A2, b2, c2, y)) ctr += Eigen::Vector2d(y[0] - y[2], y[1] - y[3]);
  }
  return {ctr, r};
}

Ellipse mvie(const ConvexPolygon& C, double tol) {
  if (C.degenerate()) throw GeometryError(ErrorCode::EmptyInput, "ellipse in a degenerate polygon");
  if (!(tol > 0)) throw GeometryError(ErrorCode::InvalidArgument, "mvie tolerance must be positive");
  DPoly d = to_dpoly(C);
  const Disc start = max_inscribed_disc(C);
  const Eigen::Vector2d o = start.center;
  const int m = static_cast<int>(d.n.size());
  std::vector<double> bb(m);
  for (int i = 0; i < m; ++i) bb[i] = d.b[i] - d.n[i].dot(o);

  using V5 = Eigen::Matrix<double, 5, 1>;
  using M5 = Eigen::Matrix<double, 5, 5>;
  V5 x;
  x << 0, 0, 0.5 * start.radius, 0, 0.5 * start.radius;

  auto slacks = [&](const V5& z, std::vector<double>& s) {
    const double det = z[2] * z[4] - z[3] * z[3];
    if (!(z[2] > 0 && det > 0)) return false;
    Eigen::Matrix2d A;
    A << z[2], z[3], z[3], z[4];
    if (Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(A).eigenvalues()[0] < 1e-12) return false;
    s.resize(m);
    for (int i = 0; i < m; ++i) {
      s[i] = bb[i] - d.n[i].x() * z[0] - d.n[i].y() * z[1] - (A * d.n[i]).norm();
      if (!(s[i] > 0)) return false;
    }
    return true;
  };
  auto value = [&](const V5& z, double mu, const std::vector<double>& s) {
    double f = std::log(z[2] * z[4] - z[3] * z[3]);
    for (double si : s) f += mu * std::log(si);
    return f;
  };
  auto derivs = [&](const V5& z, double mu, const std::vector<double>& s, V5& g, M5& H) {
    const double a11 = z[2], a12 = z[3], a22 = z[4];
    const double det = a11 * a22 - a12 * a12;
    Eigen::Vector3d gd(a22, -2 * a12, a11);
    Eigen::Matrix3d Hd;
    Hd << 0, 0, 1, 0, -2, 0, 1, 0, 0;
    g.setZero();
    H.setZero();
    g.tail<3>() = gd / det;
    H.bottomRightCorner<3, 3>() = Hd / det - gd * gd.transpose() / (det * det);
    for (int i = 0; i < m; ++i) {
      const double n1 = d.n[i].x(), n2 = d.n[i].y();
      const Eigen::Vector2d v(a11 * n1 + a12 * n2, a12 * n1 + a22 * n2);
      const double q = v.norm();
      Eigen::Matrix<double, 2, 3> J;
      J << n1, n2, 0, 0, n1, n2;
      V5 gs;
      gs.head<2>() = -d.n[i];
      gs.tail<3>() = -J.transpose() * v / q;
      M5 Hs = M5::Zero();
      const Eigen::Matrix2d P = Eigen::Matrix2d::Identity() / q - v * v.transpose() / (q * q * q);
      Hs.bottomRightCorner<3, 3>() = -J.transpose() * P * J;
      g += mu * gs / s[i];
      H += mu * (Hs / s[i] - gs * gs.transpose() / (s[i] * s[i]));
    }
  };

  std::vector<double> s, s2;
  if (!slacks(x, s)) throw GeometryError(ErrorCode::NonConvergence, "mvie: infeasible start");
  double mu = 1.0;
  double residual = INFINITY;
  int total = 0;
  for (;;) {
    for (int it = 0; it < 200; ++it, ++total) {
      V5 g;
      M5 H;
      derivs(x, mu, s, g, H);
      Eigen::LDLT<M5> f(-H);
      V5 step = f.solve(g);
      const double dec = g.dot(step);
      residual = std::sqrt(std::max(0.0, dec));
      if (dec < 1e-20 || !std::isfinite(dec)) break;
      const double f0 = value(x, mu, s);
      double t = 1;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
        V5 y = x + t * step;
        if (slacks(y, s2) && value(y, mu, s2) >= f0 + 0.25 * t * dec) {
          x = y;
          s.swap(s2);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (mu * m < tol && residual < std::sqrt(tol)) break;
    if (total > 5000 || mu < 1e-300)
      throw GeometryError(ErrorCode::NonConvergence, "mvie: no convergence, residual " + std::to_string(residual));
    mu *= 0.2;
  }
  Ellipse e;
  e.center = o + x.head<2>();
  e.A << x[2], x[3], x[3], x[4];
  return e;
}

std::optional<Disc> largest_disc(const Region& R, bool convex_hint, const InscribeOptions& opt) {
  std::optional<Disc> best;
  for (const auto& C : convex_pieces(R, convex_hint, opt)) {
    Disc d = max_inscribed_disc(C);
    if ((!best || d.radius > best->radius) && disc_in_region(d, R)) best = d;
  }
  return best;
}

std::optional<Ellipse> largest_ellipse(const Region& R, bool convex_hint, const InscribeOptions& opt) {
  std::optional<Ellipse> best;
  for (const auto& C : convex_pieces(R, convex_hint, opt)) {
    Ellipse e = mvie(C);
    if ((!best || e.area() > best->area()) && ellipse_in_region(e, R)) best = e;
  }
  return best;
}

bool disc_in_region(const Disc& D, const Region& R, double margin) {
  if (R.empty() || !(D.radius > 0)) return false;
  if (locate(R, exact_point(D.center)) != Location::Inside) return false;
  for (const auto& [a, b] : R.directed_edges()) {
    const Eigen::Vector2d pa(to_double(a.x), to_double(a.y)), pb(to_double(b.x), to_double(b.y));
    if (seg_dist(D.center, pa, pb) < D.radius * (1 - margin)) return false;
  }
  return true;
}

bool ellipse_in_region(const Ellipse& E, const Region& R, double margin) {
  if (R.empty() || !(E.A.determinant() > 0)) return false;
  if (locate(R, exact_point(E.center)) != Location::Inside) return false;
  const Eigen::Matrix2d Ai = E.A.inverse();
  for (const auto& [a, b] : R.directed_edges()) {
    const Eigen::Vector2d pa = Ai * (Eigen::Vector2d(to_double(a.x), to_double(a.y)) - E.center);
    const Eigen::Vector2d pb = Ai * (Eigen::Vector2d(to_double(b.x), to_double(b.y)) - E.center);
    if (seg_dist(Eigen::Vector2d::Zero(), pa, pb) < 1 - margin) return false;
  }
  return true;
}

namespace {

template <class Measure>
SegmentWitness longest_segment(const Region& R, bool convex_hint, Measure measure) {
  if (R.empty()) throw GeometryError(ErrorCode::EmptyInput, "segment search in an empty region");
  auto vs = R.vertices();
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Eigen::Vector2d> dv;
  for (const auto& p : vs) dv.emplace_back(to_double(p.x), to_double(p.y));
  struct Pair {
    double val;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j) pairs.push_back({measure(dv[j] - dv[i]), i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.val > b.val; });
  if (convex_hint) {
    const auto& p = pairs.front();
    return {vs[p.i], vs[p.j], p.val, false};
  }
  PreparedGallery pg(Gallery::polygonal(R));
  for (const auto& p : pairs)
    if (pg.sees(vs[p.i], vs[p.j])) return {vs[p.i], vs[p.j], p.val, true};
  return {vs[0], vs[0], 0.0, true};
}

}  // namespace

SegmentWitness longest_vwidth_segment(const Region& R, const Eigen::Vector2d& v, bool convex_hint) {
  if (v.norm() == 0) throw GeometryError(ErrorCode::InvalidArgument, "v-width direction is zero");
  return longest_segment(R, convex_hint, [&](const Eigen::Vector2d& z) { return z.dot(v); });
}

SegmentWitness longest_norm_segment(const Region& R, const PolytopeNormBall& B, bool convex_hint) {
  B.validate();
  if (B.dim() != 2) throw GeometryError(ErrorCode::InvalidArgument, "norm ball must be planar");
  return longest_segment(R, convex_hint, [&](const Eigen::Vector2d& z) { return minkowski_norm(B, Vec(z)); });
}

}  // namespace krasno
