#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "krasno/checkers.hpp"
#include "krasno/io/json.hpp"
#include "krasno/io/svg.hpp"
#include "krasno/kernel.hpp"
#include "krasno/visibility.hpp"

namespace krasno::cli {

namespace {

using io::json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot write " + path);
  f << text;
}

ColoredGallery load(const std::string& path) { return io::parse_gallery_document(io::read_json_file(path)); }

bool is_simple(const Gallery& K) {
  return K.is_polygonal() && K.region.components.size() == 1 && K.region.components[0].holes.empty();
}

std::vector<Point2> parse_points(const std::string& s) {
  std::vector<Point2> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_point(item));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool auxiliary_class(const std::string& name) { return name == "guards" || name == "viewers" || name == "spike-tips"; }

// --- vis -------------------------------------------------------------------

struct VisOpts {
  std::string gallery, point, out, svg;
};

int cmd_vis(const VisOpts& o, std::ostream& out) {
  auto g = load(o.gallery);
  const Point2 x = parse_point(o.point);
  if (!g.gallery.contains(x)) throw GeometryError(ErrorCode::NotInGallery, "point " + o.point + " is outside the gallery");
  auto v = visibility_polygon(g.gallery, x);
  emit(io::dump(io::to_json(v)), o.out, out);
  if (!o.svg.empty()) {
    io::Overlay ov;
    if (v.skeletal) {
      ov.kind = io::Overlay::Kind::Segments;
      ov.segments = v.segments;
    } else {
      ov.region = v.region;
      ov.css_class = "visibility";
    }
    io::Overlay pt{io::Overlay::Kind::Points, "", {}, {}, {x}, {}, {}, {}};
    std::vector<io::Overlay> ovs{ov};
    if (!v.antennae.empty()) ovs.push_back({io::Overlay::Kind::Segments, "", {}, v.antennae, {}, {}, {}, {}});
    ovs.push_back(pt);
    emit(io::render_svg(g, ovs), o.svg, out);
  }
  return kOk;
}

// --- kernel ----------------------------------------------------------------

struct KernelOpts {
  std::string gallery, out, svg;
  int resolution = 40;
};

json kernel_json(const Gallery& K, int resolution, Region* shape) {
  if (is_simple(K)) {
    auto k = kernel_simple(SimplePolygon::make(K.region.components[0].outer));
    json d = io::to_json(k);
    d["exact"] = true;
    d["method"] = "half-plane intersection";
    if (shape && !k.empty) *shape = k.region.to_region();
    return d;
  }
  json d;
  d["exact"] = false;
  std::vector<Point2> sample = K.vertices();
  if (K.is_polygonal()) {
    for (const auto& [a, b] : K.region.directed_edges()) sample.push_back(Rational(1, 2) * (a + b));
  } else {
    for (const auto& s : K.skeleton.segments) sample.push_back(Rational(1, 2) * (s.a + s.b));
  }
  auto conv = kernel_conv_characterization(K, sample);
  if (!conv) {
    d["empty"] = true;
    d["result"] = "EMPTY";
    d["method"] = "convex-hull characterization";
    d["area"] = "0";
    return d;
  }
  bool limited = false;
  auto x = find_kernel_point(K, resolution, &limited);
  auto grid = kernel_brute(K, resolution);
  d["method"] = "grid";
  d["bound"] = io::to_json(conv->vertices);
  d["grid_resolution"] = resolution;
  d["grid_points"] = io::to_json(grid);
  d["empty"] = !x && grid.empty();
  d["result"] = (!x && grid.empty()) ? (limited ? "EMPTY_AT_RESOLUTION" : "EMPTY") : "NONEMPTY";
  if (x) d["kernel_point"] = io::to_json(*x);
  d["resolution_limited"] = limited;
  return d;
}

int cmd_kernel(const KernelOpts& o, std::ostream& out) {
  auto g = load(o.gallery);
  Region shape;
  json d = kernel_json(g.gallery, o.resolution, &shape);
  emit(io::dump(d), o.out, out);
  if (!o.svg.empty()) {
    std::vector<io::Overlay> ovs;
    if (!shape.empty()) ovs.push_back({io::Overlay::Kind::Region, "kernel", shape, {}, {}, {}, {}, {}});
    emit(io::render_svg(g, ovs), o.svg, out);
  }
  return kOk;
}

// --- check -----------------------------------------------------------------

struct CheckOpts {
  std::string gallery, theorem = "classic", family, candidates = "default", classes, points, out, norm = "linf",
                       direction = "1,0", generator = "star";
  int k = 0, random = 20, fuzz = 0, grid = 40, min_vertices = 4, max_vertices = 14;
  double threshold = 1, conclusion_threshold = -1, tolerance = 0;
  std::uint64_t seed = 0;
  std::size_t cap = 1'000'000;
};

CheckConfig make_config(const CheckOpts& o) {
  CheckConfig cfg;
  cfg.k = o.k;
  cfg.threshold = o.threshold;
  cfg.conclusion_threshold = o.conclusion_threshold;
  cfg.tolerance = o.tolerance;
  cfg.cap = o.cap;
  cfg.grid_resolution = o.grid;
  const Point2 d = parse_point(o.direction);
  cfg.direction = {to_double(d.x), to_double(d.y)};
  if (o.norm == "linf") cfg.norm = PolytopeNormBall::linf(2);
  else if (o.norm == "l1") cfg.norm = PolytopeNormBall::l1(2);
  else throw Usage("unknown norm '" + o.norm + "' (linf, l1)");
  std::string fam = o.family;
  if (fam.empty() && parse_family(o.theorem)) fam = o.theorem;
  if (!fam.empty()) {
    auto f = parse_family(fam);
    if (!f) throw Usage("unknown witness family '" + fam + "'");
    cfg.family = *f;
  }
  return cfg;
}

CandidateSet make_candidates(const CheckOpts& o, const ColoredGallery& g) {
  CandidateSet C;
  std::vector<Point2> extra = parse_points(o.points);
  if (o.candidates == "default") {
    C = default_candidates(g.gallery, o.random, o.seed);
    for (const auto& cl : g.classes)
      for (const auto& p : cl.points)
        if (g.gallery.contains(p)) C.add(p, cl.name == "spike-tips" ? "spike-tip" : "user");
  } else if (o.candidates == "vertices") {
    for (const auto& v : g.gallery.vertices()) C.add(v, "vertex");
  } else if (o.candidates == "classes") {
    for (const auto& cl : g.classes)
      for (const auto& p : cl.points) C.add(p, cl.name == "spike-tips" ? "spike-tip" : "user");
  } else if (o.candidates != "points") {
    throw Usage("unknown candidate mode '" + o.candidates + "' (default, vertices, classes, points)");
  }
  for (const auto& p : extra) {
    if (!g.gallery.contains(p)) throw GeometryError(ErrorCode::NotInGallery, "candidate " + format_point(p) + " is outside the gallery");
    C.add(p, "user");
  }
  return C;
}

std::vector<ColorClass> pick_classes(const CheckOpts& o, const ColoredGallery& g) {
  std::vector<ColorClass> out;
  if (!o.classes.empty()) {
    for (const auto& name : split(o.classes, ',')) {
      auto it = std::find_if(g.classes.begin(), g.classes.end(), [&](const ColorClass& c) { return c.name == name; });
      if (it == g.classes.end()) throw Usage("no class named '" + name + "'");
      out.push_back(*it);
    }
  } else {
    for (const auto& c : g.classes)
      if (!auxiliary_class(c.name)) out.push_back(c);
  }
  return out;
}

int cmd_fuzz(const CheckOpts& o, std::ostream& out) {
  FuzzSpec spec;
  if (o.generator == "star") spec.generator = GeneratorKind::Star;
  else if (o.generator == "simple") spec.generator = GeneratorKind::Simple;
  else if (o.generator == "empty-kernel") spec.generator = GeneratorKind::SimpleEmptyKernel;
  else throw Usage("unknown generator '" + o.generator + "' (star, simple, empty-kernel)");
  spec.min_vertices = o.min_vertices;
  spec.max_vertices = o.max_vertices;
  spec.seed = o.seed;
  spec.random_candidates = o.random;
  if (o.theorem == "colorful-plane") spec.colorful = true;
  else if (o.theorem != "classic") throw Usage("fuzzing supports --theorem classic or colorful-plane");
  CheckConfig cfg = make_config(o);
  auto res = search_counterexample(spec, cfg, o.fuzz);
  json d;
  d["theorem"] = o.theorem;
  d["generator"] = o.generator;
  d["runs"] = res.size();
  std::map<std::string, int> counts;
  json viol = json::array();
  for (const auto& r : res) {
    ++counts[to_string(r.report.classification)];
    if (r.report.classification == Classification::TheoremViolationCandidate) {
      viol.push_back({{"seed", r.seed},
                      {"vertices", r.vertices},
                      {"polygon", io::to_json(r.polygon.vertices)},
                      {"report", io::report_document(r.report, cfg)}});
    }
  }
  d["classifications"] = counts;
  d["violations"] = viol;
  d["seed"] = o.seed;
  emit(io::dump(d), o.out, out);
  return viol.empty() ? kOk : kViolation;
}

int cmd_check(const CheckOpts& o, std::ostream& out) {
  if (o.fuzz > 0) return cmd_fuzz(o, out);
  if (o.gallery.empty()) throw Usage("check needs a gallery file (or --fuzz)");
  auto g = load(o.gallery);
  CheckConfig cfg = make_config(o);
  TheoremReport r;
  json echo{{"gallery", o.gallery}, {"candidates", o.candidates}, {"seed", o.seed}, {"random", o.random}};
  if (o.theorem == "classic") {
    r = check_classic(g.gallery, make_candidates(o, g), cfg);
  } else if (o.theorem == "colorful-plane") {
    r = check_colorful_plane(g.gallery, pick_classes(o, g), cfg);
  } else if (o.theorem == "colorful-general") {
    r = check_colorful_general(g.gallery, pick_classes(o, g), cfg);
  } else if (o.theorem == "quantitative" || parse_family(o.theorem)) {
    if (cfg.family == WitnessFamily::None) throw Usage("quantitative check needs --family");
    r = check_quantitative(g.gallery, make_candidates(o, g), cfg);
  } else {
    throw Usage("unknown theorem '" + o.theorem + "'");
  }
  emit(io::dump(io::report_document(r, cfg, echo)), o.out, out);
  return kOk;
}

// --- generate --------------------------------------------------------------

struct GenOpts {
  std::string example, sizes = "3,3", out;
  int n = 4, vertices = 10, disc_verts = 720, budget = 50;
  double M = 10, Mp = 9, irregularity = 0.5;
  std::uint64_t seed = 0;
};

int cmd_generate(const GenOpts& o, std::ostream& out) {
  ColoredGallery g;
  json extra;
  if (o.example == "fig1") {
    g = gen_fig1();
  } else if (o.example == "spider") {
    g = gen_spider();
  } else if (o.example == "claim22") {
    std::vector<int> sizes;
    for (const auto& s : split(o.sizes, ',')) sizes.push_back(std::stoi(s));
    g = gen_claim22(static_cast<int>(sizes.size()), sizes, o.seed);
  } else if (o.example == "spiked") {
    auto sg = gen_spiked(o.n, o.M, o.Mp, o.disc_verts, o.seed, o.budget);
    g.gallery = sg.scaled;
    std::vector<Point2> tips;
    for (const auto& t : sg.params.tips) tips.push_back(sg.params.scale * t);
    g.classes.push_back({"spike-tips", tips});
    g.metadata["generator"] = "spiked";
    g.metadata["seed"] = std::to_string(o.seed);
    extra = io::to_json(sg.params);
  } else if (o.example == "star") {
    g.gallery = Gallery::polygonal(gen_star(o.seed, o.vertices, o.irregularity));
    g.metadata["generator"] = "star";
    g.metadata["seed"] = std::to_string(o.seed);
  } else if (o.example == "simple") {
    g.gallery = Gallery::polygonal(gen_simple(o.seed, o.vertices));
    g.metadata["generator"] = "simple";
    g.metadata["seed"] = std::to_string(o.seed);
  } else {
    throw Usage("unknown example '" + o.example + "'");
  }
  emit(io::dump(io::gallery_document(g, extra)), o.out, out);
  return kOk;
}

// --- render ----------------------------------------------------------------

struct RenderOpts {
  std::string gallery, out;
  std::vector<std::string> overlays;
  int width = 800;
};

int cmd_render(const RenderOpts& o, std::ostream& out) {
  auto g = load(o.gallery);
  std::vector<io::Overlay> ovs;
  for (const auto& spec : o.overlays) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "kernel") {
      Region shape;
      kernel_json(g.gallery, 40, &shape);
      ovs.push_back({io::Overlay::Kind::Region, "kernel", shape, {}, {}, {}, {}, {}});
    } else if (kind == "vis") {
      const Point2 x = parse_point(arg);
      if (!g.gallery.contains(x)) throw GeometryError(ErrorCode::NotInGallery, "point " + arg + " is outside the gallery");
      auto v = visibility_polygon(g.gallery, x);
      ovs.push_back({io::Overlay::Kind::Region, "visibility", v.region, {}, {}, {}, {}, {}});
      auto segs = v.skeletal ? v.segments : v.antennae;
      if (!segs.empty()) ovs.push_back({io::Overlay::Kind::Segments, "", {}, segs, {}, {}, {}, {}});
      ovs.push_back({io::Overlay::Kind::Points, "", {}, {}, {x}, {}, {}, {}});
    } else if (kind == "points") {
      ovs.push_back({io::Overlay::Kind::Points, "", {}, {}, parse_points(arg), {}, {}, {}});
    } else {
      throw Usage("unknown overlay '" + spec + "' (kernel, vis:x,y, points:x,y;x,y)");
    }
  }
  emit(io::render_svg(g, ovs, o.width), o.out, out);
  return kOk;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonConvergence:
    case ErrorCode::ResamplingExhausted:
    case ErrorCode::NoSpikeCount: return kInternal;
    default: return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact visibility, kernels and Krasnosselsky-type checks for planar galleries", "krasno"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "krasno 0.1.0");

  VisOpts vo;
  auto* vis = app.add_subcommand("vis", "Visibility region of a point");
  vis->add_option("gallery", vo.gallery, "Gallery document")->required();
  vis->add_option("--point,-p", vo.point, "Point as x,y")->required();
  vis->add_option("--out,-o", vo.out, "Output file (default stdout)");
  vis->add_option("--svg", vo.svg, "Also write an SVG");

  KernelOpts ko;
  auto* ker = app.add_subcommand("kernel", "Kernel of a gallery");
  ker->add_option("gallery", ko.gallery, "Gallery document")->required();
  ker->add_option("--resolution", ko.resolution, "Grid resolution for non-simple galleries")->check(CLI::PositiveNumber);
  ker->add_option("--out,-o", ko.out, "Output file");
  ker->add_option("--svg", ko.svg, "Also write an SVG");

  CheckOpts co;
  auto* chk = app.add_subcommand("check", "Run a theorem checker");
  chk->add_option("gallery", co.gallery, "Gallery document");
  chk->add_option("--theorem,-t", co.theorem,
                  "classic | colorful-plane | colorful-general | quantitative | a witness family name");
  chk->add_option("--family", co.family, "box-volume | box-sum | disc | ellipse | vwidth-segment | norm-segment | region-area");
  chk->add_option("--k", co.k, "Tuple size (default per theorem)");
  chk->add_option("--threshold", co.threshold, "Hypothesis threshold");
  chk->add_option("--conclusion-threshold", co.conclusion_threshold, "Override the conclusion threshold");
  chk->add_option("--tolerance", co.tolerance, "Slack on the hypothesis threshold");
  chk->add_option("--candidates", co.candidates, "default | vertices | classes | points");
  chk->add_option("--points", co.points, "Extra candidates x,y;x,y");
  chk->add_option("--classes", co.classes, "Class names for colorful checks, comma separated");
  chk->add_option("--random", co.random, "Random interior candidates");
  chk->add_option("--seed", co.seed, "Seed");
  chk->add_option("--cap", co.cap, "Tuple enumeration cap");
  chk->add_option("--grid", co.grid, "Kernel grid resolution");
  chk->add_option("--direction", co.direction, "v for vwidth-segment, as x,y");
  chk->add_option("--norm", co.norm, "linf | l1 for norm-segment");
  chk->add_option("--fuzz", co.fuzz, "Fuzz with this many generated galleries");
  chk->add_option("--budget", co.fuzz, "Alias of --fuzz");
  chk->add_option("--generator", co.generator, "star | simple | empty-kernel (fuzz mode)");
  chk->add_option("--min-vertices", co.min_vertices);
  chk->add_option("--max-vertices", co.max_vertices);
  chk->add_option("--out,-o", co.out, "Output file");

  GenOpts go;
  auto* gen = app.add_subcommand("generate", "Write an example gallery");
  gen->add_option("--example,-e", go.example, "fig1 | spider | claim22 | spiked | star | simple")->required();
  gen->add_option("--n", go.n, "Tuple size for spiked");
  gen->add_option("--sizes", go.sizes, "Class sizes for claim22, comma separated");
  gen->add_option("--vertices", go.vertices, "Vertex count for star/simple");
  gen->add_option("--irregularity", go.irregularity, "Star irregularity in [0, 0.95]");
  gen->add_option("--M", go.M, "Spike apex radius");
  gen->add_option("--Mp", go.Mp, "Central disc radius");
  gen->add_option("--disc-verts", go.disc_verts, "Disc polygon vertex count");
  gen->add_option("--budget", go.budget, "Multistart count for the minimum estimate");
  gen->add_option("--seed", go.seed, "Seed");
  gen->add_option("--out,-o", go.out, "Output file");

  RenderOpts ro;
  auto* ren = app.add_subcommand("render", "Render a gallery as SVG");
  ren->add_option("gallery", ro.gallery, "Gallery document")->required();
  ren->add_option("--overlay", ro.overlays, "kernel | vis:x,y | points:x,y;x,y (repeatable)");
  ren->add_option("--width", ro.width, "Image width in pixels");
  ren->add_option("--out,-o", ro.out, "Output file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "krasno 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "krasno: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*vis) return cmd_vis(vo, out);
    if (*ker) return cmd_kernel(ko, out);
    if (*chk) return cmd_check(co, out);
    if (*gen) return cmd_generate(go, out);
    if (*ren) return cmd_render(ro, out);
  } catch (const Usage& e) {
    err << "krasno: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const GeometryError& e) {
    err << "krasno: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::invalid_argument& e) {
    err << "krasno: invalid number: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "krasno: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace krasno::cli
