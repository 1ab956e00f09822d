#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "krasno/boolean.hpp"
#include "krasno/inscribe.hpp"
#include "krasno/visibility.hpp"
#include "test_util.hpp"

using namespace krasno;
using tu::P;
using tu::q;

namespace {

ConvexPolygon box(double x0, double y0, double x1, double y1) {
  return box_polygon(Rational(x0), Rational(y0), Rational(x1), Rational(y1));
}

ConvexPolygon tri() { return convex_hull(std::vector<Point2>{P(0, 0), P(1, 0), P(0, 1)}); }

bool box_inside_convex(const ConvexPolygon& C, const Point2& c, const Rational& w, const Rational& h) {
  for (const auto& p : {c, Point2{c.x + w, c.y}, Point2{c.x, c.y + h}, Point2{c.x + w, c.y + h}})
    if (!C.contains(p)) return false;
  return true;
}

ConvexPolygon random_convex(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> U(-1000, 1000);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) pts.push_back(P(U(rng), U(rng)));
  return convex_hull(pts);
}

// Area-1 rescaling with a rationalised factor (area within 1e-12 of 1).
ConvexPolygon unit_area(const ConvexPolygon& C) {
  const Rational s = rationalize(1 / std::sqrt(to_double(C.area())), 1LL << 40);
  ConvexPolygon out;
  for (const auto& v : C.vertices) out.vertices.push_back(s * v);
  return out;
}

}  // namespace

TEST_CASE("erode_convex_by_box examples") {
  auto e = erode_convex_by_box(box(0, 0, 3, 3), 1, 1);
  REQUIRE(e);
  CHECK(regions_equal(e->to_region(), tu::rect(0, 0, 2, 2)));
  CHECK_FALSE(erode_convex_by_box(box(0, 0, 3, 0.2), 1, 1));
  auto t = erode_convex_by_box(convex_hull(std::vector<Point2>{P(0, 0), P(4, 0), P(0, 4)}), 1, 1);
  REQUIRE(t);
  CHECK(regions_equal(t->to_region(), tu::ring_region({P(0, 0), P(2, 0), P(0, 2)})));
  CHECK_THROWS_AS(erode_convex_by_box(box(0, 0, 1, 1), 0, 1), GeometryError);
}

TEST_CASE("erosion membership matches direct containment") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> U(-1200, 1200), S(1, 800);
  int inside = 0;
  for (int t = 0; t < 1000; ++t) {
    auto C = random_convex(rng, 3 + t % 6);
    if (C.degenerate()) continue;
    const Rational w(S(rng)), h(S(rng));
    const Point2 c = P(U(rng), U(rng));
    auto e = erode_convex_by_box(C, w, h);
    const bool in_e = e && e->contains(c);
    CHECK(in_e == box_inside_convex(C, c, w, h));
    inside += in_e;
  }
  CHECK(inside > 20);
}

TEST_CASE("convex_in_region") {
  Region L = tu::l_shape();
  CHECK(convex_in_region(box(0, 0, 1, 1), L));
  CHECK(convex_in_region(box(0, 0, 2, 1), L));
  CHECK_FALSE(convex_in_region(box(0.5, 0.5, 1.5, 1.5), L));
  CHECK_FALSE(convex_in_region(box(0, 0, 2, 2), L));
  Region holed{{PolygonWithHoles{tu::rect_ring(0, 0, 6, 6), {{P(2, 2), P(2, 4), P(4, 4), P(4, 2)}}}}};
  CHECK(convex_in_region(box(0, 0, 2, 6), holed));
  CHECK_FALSE(convex_in_region(box(1, 1, 5, 5), holed));
  CHECK_FALSE(convex_in_region(box(2.5, 2.5, 3, 3), holed));
}

TEST_CASE("boxes of given area") {
  auto b = contains_box_of_area(tu::rect(0, 0, 2, 2), 1, true);
  REQUIRE(b);
  CHECK(b->area() == 1);
  CHECK(convex_in_region(b->polygon(), tu::rect(0, 0, 2, 2)));
  CHECK_FALSE(contains_box_of_area(tu::rect(0, 0, 3, q("0.25")), 1, true));
  CHECK_FALSE(contains_box_of_area(tu::rect(0, 0, 3, q("0.25")), 1, false));
  auto l = contains_box_of_area(tu::l_shape(), 1, false);
  REQUIRE(l);
  CHECK(l->area() == 1);
  CHECK(convex_in_region(l->polygon(), tu::l_shape()));
  CHECK_FALSE(contains_box_of_area(tu::l_shape(), 2.1, false));
  CHECK_THROWS_AS(contains_box_of_area(tu::rect(0, 0, 1, 1), 0, true), GeometryError);
}

TEST_CASE("boxes of given axis sum") {
  auto b = contains_box_of_axis_sum(tu::rect(0, 0, 1, 1), 1, true);
  REQUIRE(b);
  CHECK(b->w + b->h == 1);
  CHECK(b->w == q("1/2"));
  CHECK_FALSE(contains_box_of_axis_sum(tu::rect(0, 0, q("0.1"), q("0.1")), 1, true));
  auto t = contains_box_of_axis_sum(tu::rect(0, 0, q("0.9"), q("0.2")), 1, true);
  REQUIRE(t);
  CHECK(t->w + t->h == 1);
  CHECK(t->w >= q("0.8"));
  CHECK(t->w <= q("0.9"));
  CHECK(to_double(t->w) == doctest::Approx(0.85).epsilon(1e-6));
  CHECK_THROWS_AS(contains_box_of_axis_sum(tu::rect(0, 0, 1, 1), -1, true), GeometryError);
}

TEST_CASE("largest box") {
  auto b = largest_box(tu::l_shape(), false);
  REQUIRE(b);
  CHECK(to_double(b->area()) == doctest::Approx(2).epsilon(1e-6));
  CHECK(convex_in_region(b->polygon(), tu::l_shape()));
}

TEST_CASE("Chebyshev disc") {
  auto d = max_inscribed_disc(box(0, 0, 1, 1));
  CHECK(d.radius == doctest::Approx(0.5));
  CHECK(d.center.x() == doctest::Approx(0.5));
  CHECK(d.center.y() == doctest::Approx(0.5));
  auto t = max_inscribed_disc(tri());
  CHECK(t.radius == doctest::Approx((2 - std::sqrt(2.0)) / 2).epsilon(1e-12));
  CHECK(t.center.x() == doctest::Approx(t.radius));
  auto thin = max_inscribed_disc(box(0, 0, 10, 0.2));
  CHECK(thin.radius == doctest::Approx(0.1));
  CHECK(thin.center.x() == doctest::Approx(0.1));
  CHECK(thin.center.y() == doctest::Approx(0.1));
  CHECK_THROWS_AS(max_inscribed_disc(ConvexPolygon{{P(0, 0), P(1, 0)}}), GeometryError);
  CHECK(disc_in_region(t, tri().to_region()));
  CHECK_FALSE(disc_in_region(Disc{t.center, t.radius * 1.01}, tri().to_region()));
}

TEST_CASE("mvie examples") {
  auto e = mvie(box(-1, -1, 1, 1));
  CHECK((e.A - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(e.center.norm() < 1e-6);
  auto t = mvie(tri());
  CHECK(t.area() == doctest::Approx(std::numbers::pi / (6 * std::sqrt(3.0))).epsilon(1e-7));
  CHECK(t.center.x() == doctest::Approx(1.0 / 3).epsilon(1e-6));
  CHECK(t.center.y() == doctest::Approx(1.0 / 3).epsilon(1e-6));
  auto r = mvie(box(-2, -1, 2, 1));
  Eigen::Matrix2d D;
  D << 2, 0, 0, 1;
  CHECK((r.A - D).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(ellipse_in_region(t, tri().to_region()));
  CHECK(ellipse_in_region(r, box(-2, -1, 2, 1).to_region()));
}

TEST_CASE("mvie John bound and local optimality") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> N(0, 1e-3);
  for (int t = 0; t < 50; ++t) {
    auto C = random_convex(rng, 4 + t % 10);
    if (C.degenerate()) continue;
    C = unit_area(C);
    auto e = mvie(C);
    CHECK(e.area() >= 0.25 - 1e-6);
    const Region R = C.to_region();
    CHECK(ellipse_in_region(e, R));
    if (t < 10)
      for (int k = 0; k < 10; ++k) {
        Ellipse p = e;
        Eigen::Matrix2d S;
        S << N(rng), N(rng), 0, N(rng);
        S(1, 0) = S(0, 1);
        p.A += S;
        p.center += Eigen::Vector2d(N(rng), N(rng));
        if (Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(p.A).eigenvalues()[0] <= 0) continue;
        CHECK_FALSE((p.area() > e.area() * (1 + 1e-9) && ellipse_in_region(p, R, 0)));
      }
  }
}

TEST_CASE("v-width segments") {
  auto s = longest_vwidth_segment(tu::rect(0, 0, 1, 1), {1, 0}, true);
  CHECK(s.measure == 1);
  CHECK(s.b.x - s.a.x == 1);
  const double r = std::sqrt(0.5);
  auto d = longest_vwidth_segment(tu::rect(0, 0, 1, 1), {r, r}, true);
  CHECK(d.measure == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  auto l = longest_vwidth_segment(tu::l_shape(), {1, 0}, false);
  CHECK(l.measure == 2);
  CHECK(l.resolution_limited);
  CHECK(sees(Gallery::polygonal(tu::l_shape()), l.a, l.b));
}

TEST_CASE("norm segments") {
  auto a = longest_norm_segment(tu::rect(0, 0, 1, 1), PolytopeNormBall::linf(2), true);
  CHECK(a.measure == 1);
  auto b = longest_norm_segment(tu::rect(0, 0, 1, 1), PolytopeNormBall::l1(2), true);
  CHECK(b.measure == doctest::Approx(2).epsilon(1e-9));
  Region strip = tu::ring_region({P("0.005", "-0.005"), P("0.995", "0.985"), P("0.985", "0.995"), P("-0.005", "0.005")});
  auto c = longest_norm_segment(strip, PolytopeNormBall::linf(2), true);
  CHECK(c.measure >= 0.98);
  CHECK(c.measure <= 1.0);
}

TEST_CASE("l_p against l_inf") {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> N;
  for (int t = 0; t < 1000; ++t) {
    const double x = N(rng), y = N(rng);
    const double inf = std::max(std::abs(x), std::abs(y));
    for (double p : {1.0, 2.0, 3.5}) {
      const double lp = std::pow(std::pow(std::abs(x), p) + std::pow(std::abs(y), p), 1 / p);
      CHECK(inf >= std::pow(2.0, -1 / p) * lp * (1 - 1e-12));
    }
  }
}
