#include <doctest.h>

#include <regex>

#include "krasno/boolean.hpp"
#include "krasno/io/json.hpp"
#include "krasno/io/svg.hpp"
#include "test_util.hpp"

using namespace krasno;
using io::json;
using tu::P;

namespace {

void check_same(const ColoredGallery& a, const ColoredGallery& b) {
  REQUIRE(a.gallery.kind == b.gallery.kind);
  if (a.gallery.is_polygonal()) {
    CHECK(regions_equal(a.gallery.region, b.gallery.region));
    CHECK(a.gallery.region.area() == b.gallery.region.area());
  } else {
    CHECK(a.gallery.skeleton.segments == b.gallery.skeleton.segments);
  }
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].name == b.classes[i].name);
    CHECK(a.classes[i].points == b.classes[i].points);
  }
  CHECK(a.metadata == b.metadata);
}

ColoredGallery plain(Region r) { return {Gallery::polygonal(canonicalize(r)), {}, {}}; }

}  // namespace

TEST_CASE("gallery documents round-trip exactly") {
  std::vector<ColoredGallery> corpus{gen_fig1(), gen_spider(), gen_claim22(2, {3, 3}, 4)};
  for (std::uint64_t s = 0; s < 20; ++s) {
    corpus.push_back({Gallery::polygonal(gen_star(s, 5 + static_cast<int>(s % 9))), {}, {{"seed", std::to_string(s)}}});
    corpus.push_back({Gallery::polygonal(gen_simple(s, 6 + static_cast<int>(s % 9))), {}, {}});
  }
  Region holed{{PolygonWithHoles{tu::rect_ring(0, 0, 3, 3), {{P(1, 1), P(1, 2), P(2, 2), P(2, 1)}}}}};
  corpus.push_back(plain(holed));
  corpus.push_back(plain(region_union(tu::rect(0, 0, 1, 1), tu::rect(1, 1, 2, 2))));
  corpus.push_back(plain(scale_region(tu::l_shape(), Rational(1, 3))));
  for (const auto& g : corpus) {
    const json d = io::gallery_document(g);
    const std::string text = io::dump(d);
    auto back = io::parse_gallery_document(json::parse(text));
    check_same(g, back);
    // parsing canonicalizes; after that the text is a fixed point
    const std::string again = io::dump(io::gallery_document(back));
    CHECK(io::dump(io::gallery_document(io::parse_gallery_document(json::parse(again)))) == again);
  }
}

TEST_CASE("gallery document parsing") {
  json d = json::parse(R"({"format_version": 1, "kind": "polygonal",
      "outer": [["0","0"],[0,2],["2","2"],["2","0"]], "holes": [[["0.5","0.5"],["1.5","0.5"],["1.5","1.5"],["1/2","3/2"]]]})");
  auto g = io::parse_gallery_document(d);
  CHECK(g.gallery.region.area() == 3);
  CHECK(g.gallery.region.components[0].holes.size() == 1);

  auto expect = [](const char* text, ErrorCode code) {
    try {
      io::parse_gallery_document(json::parse(text));
      FAIL("expected an error for " << text);
    } catch (const GeometryError& e) {
      CHECK(e.code() == code);
    }
  };
  expect(R"({"kind": "polygonal"})", ErrorCode::Parse);
  expect(R"({"format_version": 2, "kind": "polygonal"})", ErrorCode::Parse);
  expect(R"({"format_version": 1, "kind": "tree"})", ErrorCode::Parse);
  expect(R"({"format_version": 1, "kind": "polygonal", "outer": [["0","0"],["1","1"],["1","0"],["0","1"]]})",
         ErrorCode::InvalidPolygon);
  expect(R"({"format_version": 1, "kind": "polygonal", "outer": [["0","0"],["x","1"],["1","0"]]})", ErrorCode::Parse);
  expect(R"({"format_version": 1, "kind": "skeletal", "segments": [[["0","0"],["0","0"]]]})", ErrorCode::InvalidPolygon);
  expect(R"({"format_version": 1, "kind": "skeletal", "segments": []})", ErrorCode::EmptyInput);
  expect(R"({"format_version": 1, "kind": "polygonal", "outer": [["0","0"],["1","0"]]})", ErrorCode::InvalidPolygon);
  expect(R"([1,2])", ErrorCode::Parse);
}

TEST_CASE("report documents") {
  TheoremReport r;
  r.theorem = "classic";
  r.k = 3;
  r.hypothesis_holds = false;
  r.violating_tuple = {P(0, 0), P(1, 0), P("1/2", "1")};
  r.violating_indices = {0, 1, 4};
  r.classification = Classification::Vacuous;
  r.tuples_total = 10;
  r.tuples_checked = 2;
  r.coverage = 1;
  CheckConfig cfg;
  auto d = io::report_document(r, cfg);
  CHECK(d["classification"] == "VACUOUS");
  CHECK(d["hypothesis"]["violating_tuple"][2][0] == "1/2");
  CHECK(d["hypothesis"]["violating_indices"] == json::array({0, 1, 4}));
  CHECK(d["coverage"]["tuples_total"] == 10);
  CHECK(!d.contains("timing"));
  CHECK(io::dump(d) == io::dump(io::report_document(r, cfg)));

  Witness w;
  w.family = WitnessFamily::Disc;
  w.disc = Disc{{0.5, 0.25}, 0.125};
  auto wj = io::to_json(w);
  CHECK(wj["disc"]["radius"] == 0.125);
  CHECK(wj["family"] == "disc");
}

TEST_CASE("svg rendering") {
  auto g = gen_fig1();
  const auto a = io::render_svg(g, {});
  CHECK(a == io::render_svg(g, {}));
  CHECK(a.find("<svg") == 0);
  CHECK(a.find("class=\"gallery\"") != std::string::npos);
  CHECK(a.find("evenodd") != std::string::npos);
  // every coordinate carries exactly six decimals
  std::regex num(R"(-?\d+\.\d+)");
  int count = 0;
  const std::string body = a.substr(a.find("</style>"));
  for (auto it = std::sregex_iterator(body.begin(), body.end(), num); it != std::sregex_iterator(); ++it, ++count) {
    const auto s = it->str();
    CHECK(s.size() - s.find('.') - 1 == 6);
  }
  CHECK(count > 20);
  io::Overlay ov;
  ov.region = tu::rect(7, 3, 8, 4);
  ov.css_class = "kernel";
  const auto b = io::render_svg(g, {ov});
  CHECK(b.find("<path class=\"kernel\"") != std::string::npos);
  CHECK(b.find("<path class=\"kernel\"") > b.find("<path class=\"gallery\""));

  auto s = gen_spider();
  const auto c = io::render_svg(s, {});
  CHECK(c.find("class=\"skeleton\"") != std::string::npos);
  io::Overlay e;
  e.kind = io::Overlay::Kind::Ellipse;
  e.ellipse = Ellipse{{3, 2}, Eigen::Matrix2d::Identity() * 0.5};
  CHECK(io::render_svg(s, {e}).find("class=\"witness\"") != std::string::npos);
}
