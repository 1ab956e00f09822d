#include <random>

#include "doctest.h"
#include "krasno/boolean.hpp"
#include "krasno/convex.hpp"
#include "test_util.hpp"

using namespace krasno;
using tu::P;
using tu::q;

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("1e3") == 1000);
  CHECK_THROWS_AS(parse_rational("1/0"), GeometryError);
  CHECK_THROWS_AS(parse_rational("abc"), GeometryError);
  for (const char* s : {"7/3", "-11/5", "0", "123456789012345678901234567890/7"})
    CHECK(parse_rational(format_rational(parse_rational(s))) == parse_rational(s));
  CHECK(rationalize(0.1, 1000) == Rational(1, 10));
  CHECK(rationalize(3.14159265358979, 113) == Rational(355, 113));
  CHECK(snap_dyadic(0.75, 4) == Rational(3, 4));
}

TEST_CASE("orient") {
  CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(orient(P(0, 0), P(1, 1), P(2, 2)) == 0);
  CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(-50, 50);
  for (int i = 0; i < 500; ++i) {
    Point2 a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    CHECK(orient(a, b, c) == -orient(a, c, b));
  }
  // Nearly collinear points exercise the exact fallback.
  Point2 a{q("0"), q("0")}, b{q("1/3"), q("1/7")}, c{q("2/3"), q("2/7")};
  CHECK(orient(a, b, c) == 0);
  CHECK(orient(a, b, Point2{q("2/3"), q("2/7") + Rational(1, 1000000000) / 1000000000}) == 1);
}

TEST_CASE("convex hull") {
  std::vector<Point2> pts{P(0, 0), P(1, 0), P(0, 1), P("0.25", "0.25")};
  auto h = convex_hull(pts);
  CHECK(h.vertices == std::vector<Point2>{P(0, 0), P(1, 0), P(0, 1)});
  std::vector<Point2> sq{P(1, 1), P(0, 0), P(1, 0), P(0, 1)};
  CHECK(convex_hull(sq).area() == 1);
  std::vector<Point2> line{P(0, 0), P(1, 0), P(2, 0)};
  auto d = convex_hull(line);
  CHECK(d.degenerate());
  CHECK(d.vertices == std::vector<Point2>{P(0, 0), P(2, 0)});
  CHECK_THROWS_AS(convex_hull(std::vector<Point2>{}), GeometryError);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> u(-20, 20);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point2> s;
    for (int i = 0; i < 30; ++i) s.emplace_back(u(rng), u(rng));
    auto h1 = convex_hull(s);
    CHECK(convex_hull(h1.vertices).vertices == h1.vertices);
    for (const auto& p : s) CHECK(h1.contains(p));
  }
}

TEST_CASE("convex intersection") {
  auto a = box_polygon(0, 0, 2, 2), b = box_polygon(1, 1, 3, 3);
  auto x = convex_intersect(a, b);
  REQUIRE(x);
  CHECK(x->area() == 1);
  CHECK(x->contains(P(1, 1)));
  CHECK(x->contains(P(2, 2)));
  CHECK_FALSE(convex_intersect(box_polygon(0, 0, 1, 1), box_polygon(2, 2, 3, 3)));
  auto touch = convex_intersect(box_polygon(0, 0, 1, 1), box_polygon(1, 0, 2, 1));
  REQUIRE(touch);
  CHECK(touch->degenerate());
  CHECK(touch->area() == 0);
  CHECK(touch->vertices == std::vector<Point2>{P(1, 0), P(1, 1)});
}

TEST_CASE("half-plane intersection") {
  std::vector<HalfPlane> sq{{-1, 0, 0}, {0, -1, 0}, {1, 0, 1}, {0, 1, 1}};
  auto r = halfplane_intersect(sq);
  CHECK(r.kind == HalfPlaneResult::Kind::Bounded);
  CHECK(r.polygon.area() == 1);
  std::vector<HalfPlane> empty{{-1, 0, 0}, {1, 0, -1}};
  CHECK(halfplane_intersect(empty).kind == HalfPlaneResult::Kind::Empty);
  std::vector<HalfPlane> quadrant{{-1, 0, 0}, {0, -1, 0}};
  CHECK(halfplane_intersect(quadrant).kind == HalfPlaneResult::Kind::Unbounded);
  std::vector<HalfPlane> far{{-1, 0, -1000}, {1, 0, 1001}, {0, -1, -5000}, {0, 1, 5002}};
  auto f = halfplane_intersect(far);
  CHECK(f.kind == HalfPlaneResult::Kind::Bounded);
  CHECK(f.polygon.area() == 2);
}

TEST_CASE("area") {
  CHECK(tu::rect(0, 0, 1, 1).area() == 1);
  Region holed{{PolygonWithHoles{tu::rect_ring(0, 0, 2, 2), {{P("0.5", "0.5"), P("0.5", "1.5"), P("1.5", "1.5"), P("1.5", "0.5")}}}}};
  CHECK(holed.area() == 3);
  CHECK(tu::ring_region({P(0, 0), P(1, 0), P(0, 1)}).area() == Rational(1, 2));
}

TEST_CASE("region boolean examples") {
  auto i = region_intersection(tu::rect(0, 0, 2, 2), tu::rect(1, 1, 3, 3));
  CHECK(regions_equal(i, tu::rect(1, 1, 2, 2)));
  REQUIRE(i.components.size() == 1);
  CHECK(i.components[0].outer == tu::rect_ring(1, 1, 2, 2));

  auto u = region_union(tu::rect(0, 0, 1, 1), tu::rect(1, 0, 2, 1));
  REQUIRE(u.components.size() == 1);
  CHECK(u.components[0].outer == tu::rect_ring(0, 0, 2, 1));

  auto d = region_difference(tu::l_shape(), tu::rect(0, 0, 1, 1));
  CHECK(d.components.size() == 2);
  CHECK(d.area() == 2);
  CHECK(regions_equal(d, region_union(tu::rect(1, 0, 2, 1), tu::rect(0, 1, 1, 2))));
  // The two squares only touch at (1,1) and stay separate components.
  CHECK(d.components[0].outer == tu::rect_ring(0, 1, 1, 2));
  CHECK(d.components[1].outer == tu::rect_ring(1, 0, 2, 1));
}

TEST_CASE("boolean: holes, coincident edges, nesting") {
  auto ring = region_difference(tu::rect(0, 0, 4, 4), tu::rect(1, 1, 3, 3));
  REQUIRE(ring.components.size() == 1);
  CHECK(ring.components[0].holes.size() == 1);
  CHECK(ring.area() == 12);
  auto back = region_union(ring, tu::rect(1, 1, 3, 3));
  CHECK(back.components.size() == 1);
  CHECK(back.components[0].holes.empty());
  CHECK(back.area() == 16);
  // Island inside the hole.
  auto island = region_union(ring, tu::rect(q("1.5"), q("1.5"), q("2.5"), q("2.5")));
  CHECK(island.components.size() == 2);
  CHECK(island.area() == 13);
  // Hole touching the outer boundary at one vertex.
  Region tri_hole = region_difference(tu::rect(0, 0, 4, 4), tu::ring_region({P(2, 0), P(3, 2), P(1, 2)}));
  CHECK(tri_hole.area() == 14);
  CHECK(tri_hole.components.size() == 1);
  CHECK(tri_hole.components[0].holes.size() == 1);
  // Identical inputs.
  CHECK(region_intersection(tu::l_shape(), tu::l_shape()).area() == 3);
  CHECK(region_boolean(BoolOp::Xor, tu::l_shape(), tu::l_shape()).empty());
  CHECK(region_difference(tu::rect(0, 0, 1, 1), tu::rect(0, 0, 1, 1)).empty());
}

TEST_CASE("resolve_nonzero of a self-intersecting ring") {
  // Bow tie: two triangles touching at (1,1).
  auto r = resolve_nonzero({{P(0, 0), P(2, 2), P(2, 0), P(0, 2)}});
  CHECK(r.components.size() == 2);
  CHECK(r.area() == 2);
  // A ring with a spike contributes only its area.
  auto s = resolve_nonzero({{P(0, 0), P(1, 0), P(3, 0), P(1, 0), P(1, 1), P(0, 1)}});
  CHECK(s.area() == 1);
  CHECK(s.components.size() == 1);
}

TEST_CASE("inclusion-exclusion on random rectangles") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> u(0, 40);
  for (int t = 0; t < 500; ++t) {
    auto mk = [&] {
      int x0 = u(rng), x1 = u(rng), y0 = u(rng), y1 = u(rng);
      if (x0 == x1) ++x1;
      if (y0 == y1) ++y1;
      return tu::rect(Rational(std::min(x0, x1), 4), Rational(std::min(y0, y1), 4), Rational(std::max(x0, x1), 4),
                      Rational(std::max(y0, y1), 4));
    };
    Region a = mk(), b = mk();
    CHECK(region_union(a, b).area() + region_intersection(a, b).area() == a.area() + b.area());
  }
}

TEST_CASE("boolean agrees with a rasterization oracle") {
  std::vector<std::pair<Region, Region>> cases{
      {tu::l_shape(), tu::rect(0, 0, 1, 1)},
      {tu::l_shape(), tu::ring_region({P("0.5", "-0.5"), P("2.5", "1.5"), P("0.5", "1.5")})},
      {tu::rect(0, 0, 2, 2), tu::rect(1, 1, 3, 3)},
  };
  for (const auto& [a, b] : cases) {
    for (BoolOp op : {BoolOp::Union, BoolOp::Intersection, BoolOp::Difference}) {
      Region r = region_boolean(op, a, b);
      const tu::RasterRegion ra(a), rb(b);
      BBox bb = region_union(a, b).bbox();
      const double x0 = bb.xmin.get_d(), y0 = bb.ymin.get_d(), x1 = bb.xmax.get_d(), y1 = bb.ymax.get_d();
      const double cell = 1e-3 * std::hypot(x1 - x0, y1 - y0);
      double est = 0;
      for (double x = x0 + cell / 2; x < x1; x += cell)
        for (double y = y0 + cell / 2; y < y1; y += cell) {
          const bool ia = ra.inside(x, y), ib = rb.inside(x, y);
          const bool in = op == BoolOp::Union ? (ia || ib) : op == BoolOp::Intersection ? (ia && ib) : (ia && !ib);
          if (in) est += cell * cell;
        }
      const double tol = (tu::perimeter(a) + tu::perimeter(b)) * cell;
      CHECK(std::fabs(est - r.area().get_d()) <= tol);
    }
  }
}

TEST_CASE("Minkowski sum") {
  auto sq = box_polygon(0, 0, 1, 1);
  CHECK(minkowski_sum_convex(sq, sq).vertices == box_polygon(0, 0, 2, 2).vertices);
  ConvexPolygon pt{{P(3, 3)}};
  CHECK(minkowski_sum_convex(sq, pt).vertices == box_polygon(3, 3, 4, 4).vertices);
  ConvexPolygon tri{{P(0, 0), P(1, 0), P(0, 1)}};
  ConvexPolygon ref{{P(0, 0), P(0, -1), P(-1, 0)}};
  ref = convex_hull(ref.vertices);
  auto hex = minkowski_sum_convex(tri, ref);
  CHECK(hex.vertices.size() == 6);
  CHECK(hex.area() == 3);
  // Support additivity over 360 directions with rational tangents.
  for (int k = 0; k < 360; ++k) {
    const double th = 2 * M_PI * k / 360;
    Point2 u{rationalize(std::cos(th), 1000000), rationalize(std::sin(th), 1000000)};
    CHECK(support(hex, u) == support(tri, u) + support(ref, u));
  }
}

TEST_CASE("scale_region") {
  auto sq = tu::rect(0, 0, 1, 1);
  CHECK(regions_equal(scale_region(sq, Rational(2)), tu::rect(0, 0, 2, 2)));
  CHECK(regions_equal(scale_region(tu::l_shape(), Rational(1)), tu::l_shape()));
  CHECK(scale_region(sq, Rational(1, 2)).area() == Rational(1, 4));
  CHECK_THROWS_AS(scale_region(sq, Rational(0)), GeometryError);
  CHECK_THROWS_AS(scale_region(sq, -1.0), GeometryError);
}

TEST_CASE("simple polygon validation") {
  CHECK_NOTHROW(SimplePolygon::make(tu::l_shape_ring()));
  auto cw = tu::l_shape_ring();
  std::reverse(cw.begin(), cw.end());
  CHECK(SimplePolygon::make(cw).area() == 3);
  CHECK_THROWS_AS(SimplePolygon::make({P(0, 0), P(2, 2), P(2, 0), P(0, 2)}), GeometryError);
  CHECK_THROWS_AS(SimplePolygon::make({P(0, 0), P(1, 0)}), GeometryError);
  CHECK_THROWS_AS(SimplePolygon::make({P(0, 0), P(1, 0), P(1, 0), P(0, 1)}), GeometryError);
}
