#include <random>

#include "doctest.h"
#include "krasno/boolean.hpp"
#include "krasno/kernel.hpp"
#include "krasno/visibility.hpp"
#include "test_util.hpp"

using namespace krasno;
using tu::P;
using tu::q;

namespace {

Gallery fig1() {
  Ring r{P(6, 4), P(7, 6), P(10, 0), P(12, 6), P(13, 4), P(12, 3), P("9", "4.5"), P(7, 3)};
  return Gallery::polygonal(resolve_nonzero({r}));
}

Gallery holed_square() {
  Region r{{PolygonWithHoles{tu::rect_ring(0, 0, 6, 6), {{P(2, 2), P(2, 4), P(4, 4), P(4, 2)}}}}};
  return Gallery::polygonal(r);
}

Gallery comb() {
  return Gallery::polygonal(tu::ring_region(
      {P(0, 0), P(7, 0), P(7, 3), P(6, 3), P(6, 1), P(5, 1), P(5, 3), P(2, 3), P(2, 1), P(1, 1), P(1, 3), P(0, 3)}));
}

void check_grid_equivalence(const Gallery& K, const Point2& x, int n) {
  PreparedGallery pg(K);
  auto v = pg.visibility(x);
  CHECK(v.contains(x));
  CHECK(region_contains(K.region, v.region));
  for (const auto& y : bbox_grid(K.bbox(), n)) {
    if (!pg.contains(y)) {
      CHECK_FALSE(v.contains(y));
      continue;
    }
    const bool s = pg.sees(x, y);
    if (s != v.contains(y)) FAIL_CHECK("mismatch at x=" << format_point(x) << " y=" << format_point(y));
  }
}

}  // namespace

TEST_CASE("sees on the L-shape") {
  Gallery L = Gallery::polygonal(tu::l_shape());
  CHECK(sees(L, P("0.5", "0.5"), P("2", "0.5")));
  CHECK_FALSE(sees(L, P("1.5", "0.7"), P("0.5", "1.5")));
  CHECK(sees(L, P("1.5", "0.5"), P("0.5", "1.5")));
  CHECK(sees(L, P(2, 0), P(0, 2)));  // grazes the reflex corner
  CHECK(sees(L, P(2, 1), P(1, 2)) == false);
  CHECK(sees(L, P(2, 1), P(0, 1)));  // along the boundary through the reflex corner
  CHECK_THROWS_AS(sees(L, P(3, 3), P(0, 0)), GeometryError);
}

TEST_CASE("sees is reflexive and symmetric") {
  std::mt19937_64 rng(17);
  for (const Gallery& K : {Gallery::polygonal(tu::l_shape()), comb(), holed_square()}) {
    PreparedGallery pg(K);
    auto grid = bbox_grid(K.bbox(), 41);
    std::vector<Point2> inside;
    for (auto& p : grid)
      if (pg.contains(p)) inside.push_back(p);
    std::uniform_int_distribution<std::size_t> pick(0, inside.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const Point2& a = inside[pick(rng)];
      const Point2& b = inside[pick(rng)];
      CHECK(pg.sees(a, a));
      CHECK(pg.sees(a, b) == pg.sees(b, a));
    }
  }
}

TEST_CASE("visibility polygon of a convex gallery is the gallery") {
  Gallery K = Gallery::polygonal(tu::ring_region({P(0, 0), P(4, 0), P(5, 3), P(2, 5), P(-1, 2)}));
  for (const auto& x : {P(2, 2), P(0, 0), P(2, 0), P("4.5", "1.5")}) {
    auto v = visibility_polygon(K, x);
    CHECK(regions_equal(v.region, K.region));
    CHECK(convex_visibility(K, x).area() == K.region.area());
  }
}

TEST_CASE("visibility polygon on the L-shape") {
  Gallery L = Gallery::polygonal(tu::l_shape());
  auto v = visibility_polygon(L, P("0.5", "0.5"));
  CHECK(v.region.area() == 3);  // the point lies in the kernel
  auto w = visibility_polygon(L, P("1.5", "0.5"));
  // Everything except the part of the upper arm above the line through
  // (1.5,0.5) and (1,1).
  CHECK(w.region.area() == Rational(5, 2));
  auto h = convex_visibility(L, P("0.5", "0.5"));
  CHECK(h.contains(P(2, 2)) == false);
  CHECK(h.contains(P("1.5", "1.5")));
  CHECK(h.area() == Rational(7, 2));
  check_grid_equivalence(L, P("1.5", "0.7"), 60);
}

TEST_CASE("visibility membership equals sees on grids") {
  check_grid_equivalence(comb(), P("3.5", "2"), 60);
  check_grid_equivalence(comb(), P(0, 3), 60);
  check_grid_equivalence(comb(), P("1.5", "1"), 60);
  check_grid_equivalence(holed_square(), P(1, 1), 60);
  check_grid_equivalence(holed_square(), P(3, 1), 60);
  check_grid_equivalence(holed_square(), P(2, 2), 60);
  check_grid_equivalence(fig1(), P(7, 6), 60);
  check_grid_equivalence(fig1(), P("8", "4"), 60);
}

TEST_CASE("Figure-1 gallery visibility facts") {
  Gallery K = fig1();
  CHECK(K.region.components.size() == 3);
  auto v = visibility_polygon(K, P(7, 6));
  CHECK(v.contains(P(6, 4)));
  CHECK(v.contains(P(10, 0)));
  CHECK_FALSE(v.contains(P(13, 4)));
  std::vector<Point2> rb{P(7, 6), P(7, 3)};
  CHECK(common_visibility(K, rb).components.size() >= 1);
  CHECK(locate(common_visibility(K, rb), P(6, 4)) != Location::Outside);
  std::vector<Point2> rr{P(7, 6), P(12, 3)};
  CHECK(common_visibility(K, rr).empty());
  CHECK_FALSE(common_viewer(K, rr));
  std::vector<Point2> r1b2{P(7, 6), P(12, 6)};
  auto w = common_viewer(K, r1b2);
  REQUIRE(w);
  CHECK(*w == P(10, 0));  // the only common viewer
  CHECK(common_visibility(K, r1b2).empty());
}

TEST_CASE("common visibility equals intersection of individual regions") {
  Gallery K = comb();
  PreparedGallery pg(K);
  std::vector<Point2> xs{P("0.5", "2"), P("3.5", "0.5"), P("6.5", "2"), P(4, 2)};
  for (std::size_t k = 1; k <= xs.size(); ++k) {
    std::span<const Point2> sub(xs.data(), k);
    Region acc = pg.visibility(xs[0]).region;
    for (std::size_t i = 1; i < k; ++i) acc = region_intersection(acc, pg.visibility(xs[i]).region);
    CHECK(regions_equal(common_visibility(K, sub), acc));
  }
}

TEST_CASE("skeletal visibility") {
  SkeletalGallery one{{{P(0, 0), P(3, 1)}}};
  CHECK(skeletal_sees(one, P(0, 0), P(3, 1)));
  SkeletalGallery bent{{{P(0, 0), P(1, 1)}, {P(1, 1), P(2, 0)}}};
  CHECK_FALSE(skeletal_sees(bent, P(0, 0), P(2, 0)));
  CHECK(skeletal_sees(bent, P(0, 0), P(1, 1)));
  SkeletalGallery line{{{P(0, 0), P(1, 0)}, {P(1, 0), P(2, 0)}}};
  CHECK(skeletal_sees(line, P(0, 0), P(2, 0)));
  SkeletalGallery gap{{{P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)}}};
  CHECK_FALSE(skeletal_sees(gap, P(0, 0), P(3, 0)));
  CHECK_THROWS_AS(skeletal_sees(gap, P(0, 0), P("1.5", "0")), GeometryError);

  Gallery star = Gallery::skeletal({{P(0, 0), P(2, 0)}, {P(0, 0), P(-1, 2)}, {P(0, 0), P(-1, -2)}});
  auto v = visibility_polygon(star, P(0, 0));
  CHECK(v.segments.size() == 3);
  auto h = convex_visibility(star, P(0, 0));
  CHECK(h.vertices.size() == 3);
  CHECK(h.area() == 6);
  std::vector<Point2> tips{P(2, 0), P(-1, 2)};
  auto c = common_viewer(star, tips);
  REQUIRE(c);
  CHECK(*c == P(0, 0));
}
