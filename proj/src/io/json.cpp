#include "krasno/io/json.hpp"

#include <fstream>
#include <sstream>

#include "krasno/boolean.hpp"

namespace krasno::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw GeometryError(ErrorCode::Parse, what); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const GeometryError&) {
      bad("bad coordinate '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return rationalize(j.get<double>(), 1'000'000'000);
  bad("coordinate must be a string or a number");
}

json vec2(const Eigen::Vector2d& v) { return json::array({v.x(), v.y()}); }

}  // namespace

json to_json(const Point2& p) { return json::array({format_rational(p.x), format_rational(p.y)}); }

Point2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("a point is a two-element array");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const Ring& r) {
  json a = json::array();
  for (const auto& p : r) a.push_back(to_json(p));
  return a;
}

Ring ring_from_json(const json& j) {
  if (!j.is_array()) bad("a ring is an array of points");
  Ring r;
  for (const auto& p : j) r.push_back(point_from_json(p));
  return r;
}

json to_json(const Region& r) {
  json comps = json::array();
  for (const auto& c : r.components) {
    json holes = json::array();
    for (const auto& h : c.holes) holes.push_back(to_json(h));
    comps.push_back({{"outer", to_json(c.outer)}, {"holes", holes}});
  }
  return comps;
}

Region region_from_json(const json& j) {
  if (!j.is_array()) bad("components must be an array");
  std::vector<Ring> rings;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("outer")) bad("component without outer ring");
    Ring outer = ring_from_json(c["outer"]);
    if (outer.size() < 3 || !is_simple_ring(outer)) throw GeometryError(ErrorCode::InvalidPolygon, "outer ring is not simple");
    if (signed_area2(outer) < 0) std::reverse(outer.begin(), outer.end());
    rings.push_back(std::move(outer));
    if (c.contains("holes")) {
      if (!c["holes"].is_array()) bad("holes must be an array");
      for (const auto& hj : c["holes"]) {
        Ring h = ring_from_json(hj);
        if (h.size() < 3 || !is_simple_ring(h)) throw GeometryError(ErrorCode::InvalidPolygon, "hole ring is not simple");
        if (signed_area2(h) > 0) std::reverse(h.begin(), h.end());
        rings.push_back(std::move(h));
      }
    }
  }
  return resolve_nonzero(rings);
}

json gallery_document(const ColoredGallery& g, const json& extra) {
  json d;
  d["format_version"] = kFormatVersion;
  if (g.gallery.is_polygonal()) {
    d["kind"] = "polygonal";
    d["components"] = to_json(g.gallery.region);
  } else {
    d["kind"] = "skeletal";
    json segs = json::array();
    for (const auto& s : g.gallery.skeleton.segments) segs.push_back(json::array({to_json(s.a), to_json(s.b)}));
    d["segments"] = segs;
  }
  json cls = json::array();
  for (const auto& c : g.classes) cls.push_back({{"name", c.name}, {"points", to_json(c.points)}});
  d["classes"] = cls;
  d["metadata"] = json::object();
  for (const auto& [k, v] : g.metadata) d["metadata"][k] = v;
  if (!extra.is_null()) d["params"] = extra;
  return d;
}

ColoredGallery parse_gallery_document(const json& j) {
  if (!j.is_object()) bad("gallery document must be an object");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer()) bad("missing format_version");
  if (j["format_version"].get<int>() != kFormatVersion)
    bad("unsupported format_version " + std::to_string(j["format_version"].get<int>()));
  if (!j.contains("kind") || !j["kind"].is_string()) bad("missing kind");
  const auto kind = j["kind"].get<std::string>();
  ColoredGallery g;
  if (kind == "polygonal") {
    if (j.contains("components")) {
      g.gallery = Gallery::polygonal(region_from_json(j["components"]));
    } else if (j.contains("outer")) {
      json c{{"outer", j["outer"]}, {"holes", j.value("holes", json::array())}};
      g.gallery = Gallery::polygonal(region_from_json(json::array({c})));
    } else {
      bad("polygonal gallery without components");
    }
    if (g.gallery.region.empty()) throw GeometryError(ErrorCode::InvalidPolygon, "gallery has zero area");
  } else if (kind == "skeletal") {
    if (!j.contains("segments") || !j["segments"].is_array()) bad("skeletal gallery without segments");
    std::vector<Segment2> segs;
    for (const auto& s : j["segments"]) {
      if (!s.is_array() || s.size() != 2) bad("a segment is a pair of points");
      Segment2 seg{point_from_json(s[0]), point_from_json(s[1])};
      if (seg.degenerate()) throw GeometryError(ErrorCode::InvalidPolygon, "degenerate segment");
      segs.push_back(seg);
    }
    if (segs.empty()) throw GeometryError(ErrorCode::EmptyInput, "no segments");
    g.gallery = Gallery::skeletal(std::move(segs));
  } else {
    bad("unknown kind '" + kind + "'");
  }
  if (j.contains("classes")) {
    if (!j["classes"].is_array()) bad("classes must be an array");
    for (const auto& c : j["classes"]) {
      if (!c.is_object() || !c.contains("name") || !c["name"].is_string() || !c.contains("points")) bad("bad class entry");
      g.classes.push_back({c["name"].get<std::string>(), ring_from_json(c["points"])});
    }
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) bad("metadata must be an object");
    for (const auto& [k, v] : j["metadata"].items()) g.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return g;
}

json to_json(const VisibilityRegion& v) {
  json d;
  d["base_point"] = to_json(v.base_point);
  if (v.skeletal) {
    json segs = json::array();
    for (const auto& s : v.segments) segs.push_back(json::array({to_json(s.a), to_json(s.b)}));
    d["segments"] = segs;
  } else {
    d["components"] = to_json(v.region);
    d["area"] = format_rational(v.region.area());
    json ant = json::array();
    for (const auto& s : v.antennae) ant.push_back(json::array({to_json(s.a), to_json(s.b)}));
    d["antennae"] = ant;
  }
  return d;
}

json to_json(const Kernel& k) {
  json d;
  d["empty"] = k.empty;
  if (k.empty) {
    d["result"] = "EMPTY";
    d["area"] = "0";
  } else {
    d["vertices"] = to_json(k.region.vertices);
    d["area"] = format_rational(k.area());
  }
  return d;
}

json to_json(const SpikedGalleryParams& p) {
  json d;
  d["n"] = p.n;
  d["M"] = p.M;
  d["M_prime"] = p.Mp;
  d["disc_vertices"] = p.disc_verts;
  d["m"] = p.m;
  d["epsilon"] = p.epsilon;
  d["delta"] = p.delta;
  d["directions"] = p.thetas.size();
  d["thetas"] = p.thetas;
  d["cap_area"] = format_rational(p.cap_area);
  d["scale"] = format_rational(p.scale);
  d["tips"] = to_json(p.tips);
  d["m_is_upper_bound"] = true;
  return d;
}

json to_json(const Witness& w) {
  json d;
  d["family"] = to_string(w.family);
  d["measure"] = w.measure;
  d["resolution_limited"] = w.resolution_limited;
  if (w.point) d["point"] = to_json(*w.point);
  if (w.box) d["box"] = {{"anchor", to_json(w.box->anchor)}, {"w", format_rational(w.box->w)}, {"h", format_rational(w.box->h)}};
  if (w.disc) d["disc"] = {{"center", vec2(w.disc->center)}, {"radius", w.disc->radius}};
  if (w.ellipse)
    d["ellipse"] = {{"center", vec2(w.ellipse->center)},
                    {"A", json::array({json::array({w.ellipse->A(0, 0), w.ellipse->A(0, 1)}),
                                       json::array({w.ellipse->A(1, 0), w.ellipse->A(1, 1)})})}};
  if (w.segment)
    d["segment"] = {{"a", to_json(w.segment->a)}, {"b", to_json(w.segment->b)}, {"measure", w.segment->measure}};
  return d;
}

json report_document(const TheoremReport& r, const CheckConfig& cfg, const json& echo) {
  json d;
  d["format_version"] = kFormatVersion;
  d["theorem"] = r.theorem;
  json c;
  c["k"] = r.k;
  c["family"] = to_string(r.family);
  c["threshold"] = r.threshold;
  c["conclusion_threshold"] = r.conclusion_threshold;
  c["tolerance"] = cfg.tolerance;
  c["cap"] = cfg.cap;
  c["grid_resolution"] = cfg.grid_resolution;
  c["direction"] = vec2(cfg.direction);
  if (!echo.is_null()) c["input"] = echo;
  d["config"] = c;
  json h;
  h["holds_on_candidates"] = r.hypothesis_holds;
  if (!r.hypothesis_holds) {
    h["violating_tuple"] = to_json(r.violating_tuple);
    h["violating_indices"] = r.violating_indices;
  }
  d["hypothesis"] = h;
  json cc;
  cc["holds"] = r.conclusion_holds;
  cc["witness"] = to_json(r.witness);
  if (r.family != WitnessFamily::None) cc["kernel_measure"] = r.kernel_measure;
  if (!r.satisfied_classes.empty()) cc["satisfied_classes"] = r.satisfied_classes;
  d["conclusion"] = cc;
  d["classification"] = to_string(r.classification);
  d["coverage"] = {{"candidates", r.candidates},       {"tuples_total", r.tuples_total},
                   {"tuples_checked", r.tuples_checked}, {"truncated", r.truncated},
                   {"fraction", r.coverage}};
  d["resolution_limited"] = r.resolution_limited;
  d["notes"] = r.notes;
  d["version"] = "krasno 0.1.0";
  return d;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorCode::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw GeometryError(ErrorCode::Parse, path + ": " + e.what());
  }
}

}  // namespace krasno::io
