#include "doctest.h"
#include "krasno/boolean.hpp"
#include "krasno/kernel.hpp"
#include "test_util.hpp"

using namespace krasno;
using tu::P;
using tu::q;

namespace {

SimplePolygon comb() {
  return SimplePolygon::make(
      {P(0, 0), P(7, 0), P(7, 3), P(6, 3), P(6, 1), P(5, 1), P(5, 3), P(2, 3), P(2, 1), P(1, 1), P(1, 3), P(0, 3)});
}

Gallery fig1() {
  Ring r{P(6, 4), P(7, 6), P(10, 0), P(12, 6), P(13, 4), P(12, 3), P("9", "4.5"), P(7, 3)};
  return Gallery::polygonal(resolve_nonzero({r}));
}

}  // namespace

TEST_CASE("kernel_simple examples") {
  auto sq = kernel_simple(SimplePolygon::make(tu::rect_ring(0, 0, 1, 1)));
  REQUIRE_FALSE(sq.empty);
  CHECK(sq.area() == 1);
  auto L = kernel_simple(SimplePolygon::make(tu::l_shape_ring()));
  REQUIRE_FALSE(L.empty);
  CHECK(regions_equal(L.region.to_region(), tu::rect(0, 0, 1, 1)));
  CHECK(L.area() == 1);
  CHECK(L.certificate.size() == 6);
  CHECK(kernel_simple(comb()).empty);
  CHECK(kernel_brute(Gallery::polygonal(comb()), 31).empty());
}

TEST_CASE("kernel_simple handles a point kernel") {
  // Two notches leave exactly the segment/point where their walls meet.
  auto P1 = SimplePolygon::make({P(0, 0), P(4, 0), P(4, 4), P(3, 4), P(2, 2), P(1, 4), P(0, 4)});
  auto k = kernel_simple(P1);
  REQUIRE_FALSE(k.empty);
  for (const auto& v : k.region.vertices) CHECK(point_in_kernel(Gallery::polygonal(P1), v));
}

TEST_CASE("point_in_kernel") {
  Gallery sq = Gallery::polygonal(tu::rect(0, 0, 1, 1));
  CHECK(point_in_kernel(sq, P("0.3", "0.9")));
  CHECK(point_in_kernel(sq, P(1, 1)));
  Gallery L = Gallery::polygonal(tu::l_shape());
  CHECK(point_in_kernel(L, P("0.5", "0.5")));
  CHECK_FALSE(point_in_kernel(L, P("1.5", "0.5")));
  CHECK(point_in_kernel(L, P(1, 1)));
  CHECK(point_in_kernel(L, P(0, 0)));
  CHECK_THROWS_AS(point_in_kernel(L, P(3, 3)), GeometryError);
  Region annulus{{PolygonWithHoles{tu::rect_ring(0, 0, 6, 6), {{P(2, 2), P(2, 4), P(4, 4), P(4, 2)}}}}};
  Gallery A = Gallery::polygonal(annulus);
  for (const auto& x : {P(1, 1), P(0, 0), P(2, 2), P(3, 1), P(5, 5)}) CHECK_FALSE(point_in_kernel(A, x));
}

TEST_CASE("kernel_conv_characterization") {
  Gallery conv = Gallery::polygonal(tu::ring_region({P(0, 0), P(4, 0), P(5, 3), P(2, 5)}));
  std::vector<Point2> s{P(1, 1), P(4, 0)};
  auto c = kernel_conv_characterization(conv, s);
  REQUIRE(c);
  CHECK(regions_equal(c->to_region(), conv.region));

  Gallery L = Gallery::polygonal(tu::l_shape());
  auto lv = tu::l_shape_ring();
  auto k6 = kernel_conv_characterization(L, lv);
  REQUIRE(k6);
  CHECK(region_contains(k6->to_region(), tu::rect(0, 0, 1, 1)));
  // Adding edge midpoints can only shrink the result, and here reaches the kernel.
  std::vector<Point2> more = lv;
  for (std::size_t i = 0; i < lv.size(); ++i) more.push_back(Rational(1, 2) * (lv[i] + lv[(i + 1) % lv.size()]));
  auto k12 = kernel_conv_characterization(L, more);
  REQUIRE(k12);
  CHECK(region_contains(k6->to_region(), k12->to_region()));
  CHECK(region_contains(k12->to_region(), tu::rect(0, 0, 1, 1)));

  Gallery F = fig1();
  auto fv = F.vertices();
  std::vector<Point2> eight{P(6, 4), P(7, 6), P(10, 0), P(12, 6), P(13, 4), P(12, 3), P("9", "4.5"), P(7, 3)};
  CHECK_FALSE(kernel_conv_characterization(F, eight));
}

TEST_CASE("kernel_brute") {
  CHECK(kernel_brute(Gallery::polygonal(tu::rect(0, 0, 1, 1)), 11).size() == 121);
  auto pts = kernel_brute(Gallery::polygonal(tu::l_shape()), 21);
  CHECK(pts.size() == 11 * 11);
  for (const auto& p : pts) CHECK((p.x <= 1 && p.y <= 1));
  CHECK(kernel_brute(fig1(), 50).empty());
}

TEST_CASE("find_kernel_point") {
  CHECK(find_kernel_point(Gallery::polygonal(tu::l_shape()), 10));
  CHECK_FALSE(find_kernel_point(fig1(), 10));
  bool limited = true;
  Region annulus{{PolygonWithHoles{tu::rect_ring(0, 0, 6, 6), {{P(2, 2), P(2, 4), P(4, 4), P(4, 2)}}}}};
  CHECK_FALSE(find_kernel_point(Gallery::polygonal(annulus), 10, &limited));
  CHECK_FALSE(limited);
}
