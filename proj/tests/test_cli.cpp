#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "krasno/boolean.hpp"
#include "krasno/io/json.hpp"
#include "test_util.hpp"

using namespace krasno;
using io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "krasno");
  std::ostringstream o, e;
  const int c = cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "krasno_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = tmp(name);
  std::ofstream(p) << text;
  return p;
}

std::string gallery_file(const std::string& name, const Region& r) {
  return write(name, io::dump(io::gallery_document({Gallery::polygonal(r), {}, {}})));
}

}  // namespace

TEST_CASE("generate is byte-stable") {
  auto a = run({"generate", "--example", "fig1"});
  auto b = run({"generate", "--example", "fig1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.doc()["kind"] == "polygonal");
  CHECK(a.doc()["classes"].size() == 3);
  auto s1 = run({"generate", "-e", "star", "--seed", "42"});
  auto s2 = run({"generate", "-e", "star", "--seed", "42"});
  CHECK(s1.out == s2.out);
  CHECK(s1.out != run({"generate", "-e", "star", "--seed", "43"}).out);
  CHECK(run({"generate", "-e", "spider"}).doc()["segments"].size() == 24);
  CHECK(run({"generate", "-e", "claim22", "--sizes", "3,3,3", "--seed", "1"}).doc()["segments"].size() == 81);
  CHECK(run({"generate", "-e", "claim22", "--sizes", "2,3"}).code == 2);
  CHECK(run({"generate", "-e", "nothing"}).code == 2);
  const auto f = tmp("fig1.json");
  CHECK(run({"generate", "-e", "fig1", "-o", f}).out.empty());
  std::ifstream in(f);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("kernel command") {
  auto L = gallery_file("l.json", tu::l_shape());
  auto r = run({"kernel", L});
  CHECK(r.code == 0);
  CHECK(r.doc()["area"] == "1");
  CHECK(r.doc()["empty"] == false);

  auto sq = gallery_file("sq.json", tu::rect(0, 0, 3, 2));
  CHECK(run({"kernel", sq}).doc()["area"] == "6");

  const auto fig = tmp("fig1k.json");
  run({"generate", "-e", "fig1", "-o", fig});
  r = run({"kernel", fig});
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == "EMPTY");

  Region holed{{PolygonWithHoles{tu::rect_ring(0, 0, 3, 3), {{tu::P(1, 1), tu::P(1, 2), tu::P(2, 2), tu::P(2, 1)}}}}};
  r = run({"kernel", gallery_file("holed.json", holed), "--resolution", "12"});
  CHECK(r.doc()["result"] == "EMPTY");
  CHECK(run({"kernel", tmp("missing.json")}).code == 2);
  CHECK(run({"kernel", write("junk.json", "{not json")}).code == 2);
}

TEST_CASE("vis command") {
  auto sq = gallery_file("sq2.json", tu::rect(0, 0, 2, 2));
  auto r = run({"vis", sq, "--point", "1,1"});
  CHECK(r.code == 0);
  auto reg = io::region_from_json(r.doc()["components"]);
  CHECK(regions_equal(reg, tu::rect(0, 0, 2, 2)));
  CHECK(r.doc()["area"] == "4");
  auto bad = run({"vis", sq, "--point", "5,5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("outside") != std::string::npos);

  const auto fig = tmp("fig1v.json");
  run({"generate", "-e", "fig1", "-o", fig});
  r = run({"vis", fig, "-p", "7,6"});
  auto lib = visibility_polygon(gen_fig1().gallery, tu::P(7, 6));
  CHECK(r.doc()["area"] == format_rational(lib.region.area()));
  CHECK(regions_equal(io::region_from_json(r.doc()["components"]), lib.region));
  CHECK(r.doc()["antennae"].size() == lib.antennae.size());
  const auto svg = tmp("vis.svg");
  CHECK(run({"vis", fig, "-p", "7,6", "--svg", svg}).code == 0);
  CHECK(std::filesystem::file_size(svg) > 100);
}

TEST_CASE("check command") {
  const auto star = tmp("star.json");
  run({"generate", "-e", "star", "--seed", "42", "-o", star});
  auto r = run({"check", star, "--theorem", "classic", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.doc()["classification"] == "CONSISTENT");
  CHECK(r.out == run({"check", star, "--theorem", "classic", "--seed", "3"}).out);

  const auto fig = tmp("fig1c.json");
  run({"generate", "-e", "fig1", "-o", fig});
  r = run({"check", fig, "-t", "colorful-plane", "--classes", "red,blue"});
  CHECK(r.doc()["hypothesis"]["holds_on_candidates"] == true);
  CHECK(r.doc()["conclusion"]["holds"] == false);
  CHECK(r.doc()["classification"] == "CONSISTENT_WITH_CLAIM");
  r = run({"check", fig, "-t", "classic", "--candidates", "classes"});
  CHECK(r.doc()["classification"] == "VACUOUS");
  CHECK(r.doc()["hypothesis"]["violating_tuple"].size() == 3);

  const auto sp = tmp("spider.json");
  run({"generate", "-e", "spider", "-o", sp});
  r = run({"check", sp, "-t", "colorful-plane"});
  CHECK(r.doc()["coverage"]["tuples_checked"] == 8);
  CHECK(r.doc()["classification"] == "CONSISTENT_WITH_CLAIM");

  auto L3 = gallery_file("l3.json", scale_region(tu::l_shape(), Rational(3)));
  r = run({"check", L3, "-t", "disc", "--threshold", "1", "--candidates", "vertices"});
  CHECK(r.doc()["classification"] == "CONSISTENT");
  CHECK(r.doc()["config"]["k"] == 3);

  CHECK(run({"check", star, "-t", "nonsense"}).code == 2);
  CHECK(run({"check", star, "-t", "quantitative"}).code == 2);
  CHECK(run({"check", star, "--points", "99999,0"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", star, "--norm", "l7", "-t", "norm-segment"}).code == 2);
}

TEST_CASE("check on a spiked gallery") {
  const auto f = tmp("spiked.json");
  REQUIRE(run({"generate", "-e", "spiked", "--n", "4", "--disc-verts", "120", "--budget", "8", "-o", f}).code == 0);
  auto doc = io::read_json_file(f);
  CHECK(doc["params"]["m_is_upper_bound"] == true);
  CHECK(doc["classes"][0]["name"] == "spike-tips");
  const double eps = doc["params"]["epsilon"].get<double>();
  auto r = run({"check", f, "-t", "region-area", "--candidates", "classes", "--k", "4", "--threshold", "1", "--tolerance",
                "0.001"});
  CHECK(r.doc()["hypothesis"]["holds_on_candidates"] == true);
  CHECK(r.doc()["classification"] == "CONSISTENT");
  CHECK(r.doc()["conclusion"]["kernel_measure"].get<double>() <= 1 - eps + 1e-3);
  // no unit-area box in the rounded caps
  r = run({"check", f, "-t", "box-volume", "--candidates", "classes", "--k", "4", "--threshold", "1"});
  CHECK(r.doc()["hypothesis"]["holds_on_candidates"] == false);
  CHECK(r.doc()["classification"] == "VACUOUS");
}

TEST_CASE("fuzz mode") {
  auto r = run({"check", "--fuzz", "6", "--generator", "star", "--random", "2"});
  CHECK(r.code == 0);
  CHECK(r.doc()["classifications"]["CONSISTENT"] == 6);
  r = run({"check", "--fuzz", "6", "--generator", "empty-kernel", "--random", "0", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.doc()["classifications"]["VACUOUS"] == 6);
  r = run({"check", "--fuzz", "4", "--generator", "simple", "-t", "colorful-plane", "--random", "3"});
  CHECK(r.code == 0);
  CHECK(r.doc()["violations"].empty());
  CHECK(run({"check", "--fuzz", "3", "--generator", "weird"}).code == 2);
}

TEST_CASE("render command") {
  auto L = gallery_file("lr.json", tu::l_shape());
  auto plain = run({"render", L});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("<path class=\"gallery\"") != std::string::npos);
  CHECK(plain.out.find("<path class=\"kernel\"") == std::string::npos);
  auto k = run({"render", L, "--overlay", "kernel"});
  CHECK(k.out.find("<path class=\"kernel\"") != std::string::npos);
  CHECK(k.out == run({"render", L, "--overlay", "kernel"}).out);
  auto v = run({"render", L, "--overlay", "vis:0.5,1.5", "--overlay", "points:1,1;0,0"});
  CHECK(v.code == 0);
  CHECK(v.out.find("<path class=\"visibility\"") != std::string::npos);
  CHECK(run({"render", L, "--overlay", "bogus"}).code == 2);
  CHECK(run({"render", L, "--overlay", "vis:9,9"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"vis"}).code == 2);
}
