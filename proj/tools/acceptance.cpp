// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krasno/boolean.hpp"
#include "krasno/checkers.hpp"
#include "krasno/galleries.hpp"
#include "krasno/inscribe.hpp"
#include "krasno/kernel.hpp"
#include "krasno/param.hpp"
#include "krasno/visibility.hpp"

using namespace krasno;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool c, const std::string& what) {
    if (!c && ok) detail << "failed: " << what << "; ";
    ok = ok && c;
  }
};

const std::vector<Point2>& cls(const ColoredGallery& g, const std::string& name) {
  for (const auto& c : g.classes)
    if (c.name == name) return c.points;
  throw GeometryError(ErrorCode::InvalidArgument, "no class " + name);
}

bool viewer_exists(const Gallery& K, std::vector<Point2> pts) { return common_viewer(K, pts).has_value(); }

void fig1(Outcome& o) {
  auto g = gen_fig1();
  const auto& red = cls(g, "red");
  const auto& blue = cls(g, "blue");
  int pairs = 0;
  for (const auto& r : red)
    for (const auto& b : blue) pairs += viewer_exists(g.gallery, {r, b});
  o.require(red.size() == 2 && blue.size() == 2, "two red and two blue points");
  o.require(pairs == 4, "red x blue pairs commonly visible");
  o.require(!viewer_exists(g.gallery, red), "red pair has no common viewer");
  o.require(!viewer_exists(g.gallery, blue), "blue pair has no common viewer");
  o.require(!find_kernel_point(g.gallery, 60).has_value(), "kernel empty");
  o.require(kernel_brute(g.gallery, 100).empty(), "kernel empty on 100x100 grid");
  o.detail << "pairs seen " << pairs << "/4";
}

void spider(Outcome& o) {
  auto g = gen_spider();
  const auto& S = g.gallery.skeleton;
  const auto& p = cls(g, "viewers");
  const auto &R = cls(g, "r"), &G = cls(g, "g"), &B = cls(g, "b");
  o.require(p.size() == 8 && R.size() == 2 && G.size() == 2 && B.size() == 2, "class sizes");
  int seen = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        const auto& v = p[4 * i + 2 * j + k];
        seen += skeletal_sees(S, v, R[i]) && skeletal_sees(S, v, G[j]) && skeletal_sees(S, v, B[k]);
      }
  o.require(seen == 8, "every colorful triple seen by its viewer");
  for (const auto* c : {&R, &G, &B}) o.require(!viewer_exists(g.gallery, *c), "class not commonly visible");
  o.detail << "triples seen " << seen << "/8";
}

void claim22(Outcome& o) {
  for (int n : {2, 3})
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto g = gen_claim22(n, std::vector<int>(n, 3), seed);
      auto r = verify_claim22(g);
      o.require(r.tuples_seen, "tuples seen by their guard");
      o.require(r.max_seen_per_class <= 2, "no point sees three of a class");
      o.detail << "n=" << n << " seed=" << seed << " max_seen=" << r.max_seen_per_class << " cand=" << r.candidates
               << "; ";
    }
}

void classic(Outcome& o) {
  int nonempty = 0;
  for (std::uint64_t s = 0; s < 200; ++s)
    nonempty += !kernel_simple(gen_star(s, 4 + static_cast<int>(s % 17))).empty;
  o.require(nonempty == 200, "star kernels nonempty");
  CheckConfig cfg;
  FuzzSpec star;
  star.generator = GeneratorKind::Star;
  star.seed = 1;
  int tvc = 0, consistent = 0, refuted = 0;
  for (const auto& f : search_counterexample(star, cfg, 200)) {
    tvc += f.report.classification == Classification::TheoremViolationCandidate;
    consistent += f.report.classification == Classification::Consistent;
  }
  FuzzSpec empty;
  empty.generator = GeneratorKind::SimpleEmptyKernel;
  empty.seed = 1;
  for (const auto& f : search_counterexample(empty, cfg, 200)) {
    tvc += f.report.classification == Classification::TheoremViolationCandidate;
    const auto& t = f.report.violating_tuple;
    if (f.report.classification == Classification::Vacuous && t.size() == 3 &&
        !viewer_exists(Gallery::polygonal(Region::from_simple(f.polygon)), t))
      ++refuted;
  }
  o.require(consistent == 200, "checker consistent on star polygons");
  o.require(refuted == 200, "empty-kernel polygons yield a blind triple");
  o.require(tvc == 0, "no violation candidates");
  o.detail << "star kernels " << nonempty << "/200, consistent " << consistent << "/200, blind triples " << refuted
           << "/200, violations " << tvc;
}

void spiked(Outcome& o) {
  auto sg = gen_spiked(4, 10, 9, 720, 1, 50);
  const auto& P = sg.params;
  const double eps = 0.5 - 1 / (2 * P.m);
  std::vector<Point2> tips;
  for (const auto& t : P.tips) tips.push_back(P.scale * t);
  PreparedGallery pg(sg.scaled);
  std::vector<Region> vis;
  for (const auto& t : tips) vis.push_back(pg.visibility(t).region);
  const std::size_t N = tips.size();
  double worst = INFINITY;
  int tuples = 0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      const Region ab = region_intersection(vis[a], vis[b]);
      for (std::size_t c = b + 1; c < N; ++c) {
        const Region abc = region_intersection(ab, vis[c]);
        for (std::size_t d = c + 1; d < N; ++d) {
          worst = std::min(worst, to_double(region_intersection(abc, vis[d]).area()));
          ++tuples;
        }
      }
    }
  const auto& poly = sg.scaled.region.components.at(0);
  o.require(sg.scaled.region.components.size() == 1 && poly.holes.empty(), "spiked gallery is a simple polygon");
  const double kern = to_double(kernel_simple(SimplePolygon{poly.outer}).area());
  o.require(N >= 4, "at least four spikes");
  o.require(worst >= 1 - 1e-3, "4-tuple common visibility area");
  o.require(kern <= 1 - eps + 1e-3, "kernel area");
  char buf[256];
  std::snprintf(buf, sizeof buf, "m=%.6f eps=%.6f spikes=%zu tuples=%d min4=%.6f kernel=%.6f bound=%.6f", P.m, eps, N,
                tuples, worst, kern, 1 - eps + 1e-3);
  o.detail << buf;
}

void param(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> L(0, 1);
  double worst = INFINITY;
  int trials = 0;
  for (Family f : {Family::BoxVol, Family::BoxSum, Family::Ball, Family::EllAxis})
    for (int d = 2; d <= 4; ++d)
      for (std::uint64_t t = 0; t < 1000; ++t) {
        auto a = random_param(f, d, 100000 * d + 2 * t), b = random_param(f, d, 100000 * d + 2 * t + 1);
        worst = std::min(worst, check_param_containment(a, b, L(rng), d == 2 ? 360 : 200, {}, t));
        ++trials;
      }
  o.require(worst >= -1e-9, "containment margin");
  int logc = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const int d = 2 + static_cast<int>(t % 3);
    const Mat A = std::get<EllipsoidD>(realize(random_param(Family::EllVol, d, t))).shape;
    const Mat B = std::get<EllipsoidD>(realize(random_param(Family::EllVol, d, t + 50000))).shape;
    const double lam = L(rng);
    // log det is concave: det(lam A + (1-lam) B) >= det(A)^lam det(B)^(1-lam)
    logc += std::log((lam * A + (1 - lam) * B).determinant()) >=
            lam * std::log(A.determinant()) + (1 - lam) * std::log(B.determinant()) - 1e-12;
  }
  o.require(logc == 1000, "det log-concavity");
  std::normal_distribution<double> Nd;
  double det_err = 0, polar_err = 0;
  for (int t = 0; t < 1000; ++t) {
    const int d = 2 + t % 3;
    Mat X(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) X(i, j) = Nd(rng);
    if (std::abs(X.determinant()) < 1e-3) continue;
    const Mat S = X * X.transpose() + 0.1 * Mat::Identity(d, d);
    det_err = std::max(det_err, std::abs(ellipsoid_project_pi(Vec::Zero(d), S).shape.determinant() - 1));
    auto pd = polar_decompose(X);
    polar_err = std::max(polar_err, (pd.A * pd.Q - X).norm() / X.norm());
  }
  o.require(det_err <= 1e-12, "project_pi determinant");
  o.require(polar_err <= 1e-12, "polar reconstruction");
  char buf[200];
  std::snprintf(buf, sizeof buf, "trials=%d min_margin=%.3g logconcave=%d/1000 det_err=%.3g polar_err=%.3g", trials,
                worst, logc, det_err, polar_err);
  o.detail << buf;
}

void john(Outcome& o) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> U(-1000, 1000);
  double worst = INFINITY;
  int done = 0;
  while (done < 50) {
    std::vector<Point2> pts;
    for (int i = 0; i < 4 + done % 12; ++i) pts.push_back(Point2(long(U(rng)), long(U(rng))));
    auto C = convex_hull(pts);
    if (C.degenerate()) continue;
    const Rational s = rationalize(1 / std::sqrt(to_double(C.area())), 1LL << 40);
    for (auto& v : C.vertices) v = s * v;
    worst = std::min(worst, mvie(C).area() / to_double(C.area()));
    ++done;
  }
  o.require(worst >= 0.25 - 1e-6, "John bound");
  auto sq = mvie(box_polygon(Rational(0), Rational(0), Rational(1), Rational(1)));
  const double sq_err =
      std::max((sq.A - 0.5 * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), (sq.center - Eigen::Vector2d(0.5, 0.5)).norm());
  o.require(sq_err <= 1e-6, "square mvie is the inscribed disc");
  auto tri = mvie(convex_hull(std::vector<Point2>{Point2(0L, 0L), Point2(1L, 0L), Point2(0L, 1L)}));
  const double tri_err = std::abs(tri.area() - std::numbers::pi / (6 * std::sqrt(3.0)));
  o.require(tri_err <= 1e-5, "triangle mvie area");
  char buf[160];
  std::snprintf(buf, sizeof buf, "min ratio=%.6f square err=%.3g triangle err=%.3g", worst, sq_err, tri_err);
  o.detail << buf;
}

void diameter(Outcome& o) {
  const Region sq{{PolygonWithHoles{{Point2(0L, 0L), Point2(1L, 0L), Point2(1L, 1L), Point2(0L, 1L)}, {}}}};
  const double axis = longest_vwidth_segment(sq, {1, 0}, true).measure;
  const double r = std::sqrt(0.5);
  const double diag = longest_vwidth_segment(sq, {r, r}, true).measure;
  o.require(axis == 1, "axis v-width");
  o.require(std::abs(diag - std::sqrt(2.0)) <= 1e-12, "diagonal v-width");
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> U(-1000000, 1000000);
  int ok = 0;
  for (int t = 0; t < 1000; ++t) {
    const Rational x(U(rng), 1000), y(U(rng), 1000);
    const Rational ax = abs(x), ay = abs(y), inf = std::max(ax, ay);
    bool good = 2 * inf >= ax + ay;                // p = 1
    good = good && 2 * inf * inf >= ax * ax + ay * ay;  // p = 2, squared
    good = good && inf >= inf;                     // p = inf
    const double fx = to_double(x), fy = to_double(y);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double lp = std::pow(std::pow(std::abs(fx), p) + std::pow(std::abs(fy), p), 1 / p);
      good = good && to_double(inf) >= std::pow(2.0, -1 / p) * lp * (1 - 1e-12);
    }
    ok += good;
  }
  o.require(ok == 1000, "l_p against l_inf");
  const double l1 = longest_norm_segment(sq, PolytopeNormBall::l1(2), true).measure;
  o.require(std::abs(l1 - 2) <= 1e-9, "l1 diameter of the unit square");
  char buf[160];
  std::snprintf(buf, sizeof buf, "axis=%.17g diag=%.17g lp=%d/1000 l1=%.17g", axis, diag, ok, l1);
  o.detail << buf;
}

void oracles(Outcome& o) {
  std::vector<std::pair<Gallery, Point2>> cases;
  auto rect = [](long a, long b, long c, long d) { return Ring{Point2(a, b), Point2(c, b), Point2(c, d), Point2(a, d)}; };
  cases.push_back({gen_fig1().gallery, Point2(7L, 6L)});
  cases.push_back({Gallery::polygonal(Region{{PolygonWithHoles{rect(0, 0, 6, 6), {{Point2(2L, 2L), Point2(2L, 4L),
                                                                                    Point2(4L, 4L), Point2(4L, 2L)}}}}}),
                   Point2(1L, 1L)});
  cases.push_back({Gallery::polygonal(Region{{PolygonWithHoles{{Point2(0L, 0L), Point2(7L, 0L), Point2(7L, 3L),
                                                                Point2(6L, 3L), Point2(6L, 1L), Point2(5L, 1L),
                                                                Point2(5L, 3L), Point2(2L, 3L), Point2(2L, 1L),
                                                                Point2(1L, 1L), Point2(1L, 3L), Point2(0L, 3L)},
                                                               {}}}}),
                   Point2(Rational(7, 2), Rational(2))});
  for (std::uint64_t s = 0; cases.size() < 20; ++s) {
    const auto P = s % 2 ? gen_simple(s, 8 + static_cast<int>(s % 13)) : gen_star(s, 6 + static_cast<int>(s % 13));
    const auto& v = P.vertices;
    cases.push_back({Gallery::polygonal(Region::from_simple(P)), v[s % v.size()]});
  }
  long mismatches = 0, points = 0;
  for (const auto& [K, x] : cases) {
    PreparedGallery pg(K);
    const auto V = pg.visibility(x);
    for (const auto& y : bbox_grid(K.bbox(), 100)) {
      const bool in = pg.contains(y);
      mismatches += in ? pg.sees(x, y) != V.contains(y) : V.contains(y);
      ++points;
    }
  }
  o.require(mismatches == 0, "visibility polygon vs sees");
  long kmis = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto P = gen_star(1000 + s, 5 + static_cast<int>(s % 15));
    const auto k = kernel_simple(P);
    const Gallery K = Gallery::polygonal(Region::from_simple(P));
    const auto brute = kernel_brute(K, 100);
    const std::set<Point2> bs(brute.begin(), brute.end());
    for (const auto& y : bbox_grid(K.bbox(), 100)) kmis += (!k.empty && k.region.contains(y)) != (bs.count(y) > 0);
  }
  o.require(kmis == 0, "kernel_simple vs kernel_brute");
  o.detail << "visibility grid points " << points << " mismatches " << mismatches << ", kernel mismatches " << kmis;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("acceptance checks");
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);
  const std::vector<Criterion> all{
      {1, "fig1 regression", 5, fig1},
      {2, "spider regression", 5, spider},
      {3, "guard-segment construction", 60, claim22},
      {4, "classic property suite", 600, classic},
      {5, "spiked non-exactness", 600, spiked},
      {6, "parametrization suite", 120, param},
      {7, "John bound", 120, john},
      {8, "diameter suite", 60, diameter},
      {9, "oracle equivalence", 600, oracles},
  };
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && s <= c.limit_s;
    if (o.ok && !pass) o.detail << "; over time limit " << c.limit_s << " s";
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, c.name, pass ? "PASS" : "FAIL", s, o.detail.str().c_str());
    std::fflush(stdout);
    failed += !pass;
  }
  return failed ? 1 : 0;
}
