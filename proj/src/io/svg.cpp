#include "krasno/io/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace krasno::io {

namespace {

std::string f6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0 ? 0.0 : v);  // no "-0.000000"
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

struct Frame {
  double xmin = 0, ymax = 0, s = 1, pad = 20;
  int w = 0, h = 0;

  std::string xy(double x, double y) const { return f6((x - xmin) * s + pad) + " " + f6((ymax - y) * s + pad); }
  std::string xy(const Point2& p) const { return xy(to_double(p.x), to_double(p.y)); }
};

std::string ring_path(const Frame& F, const Ring& r) {
  std::string d;
  for (std::size_t i = 0; i < r.size(); ++i) d += (i ? " L " : "M ") + F.xy(r[i]);
  return d + " Z";
}

std::string region_path(const Frame& F, const Region& R) {
  std::string d;
  for (const auto& c : R.components) {
    if (!d.empty()) d += " ";
    d += ring_path(F, c.outer);
    for (const auto& h : c.holes) d += " " + ring_path(F, h);
  }
  return d;
}

std::string segment_path(const Frame& F, const std::vector<Segment2>& segs) {
  std::string d;
  for (const auto& s : segs) d += (d.empty() ? "" : " ") + std::string("M ") + F.xy(s.a) + " L " + F.xy(s.b);
  return d;
}

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_svg(const ColoredGallery& g, const std::vector<Overlay>& overlays, int width) {
  const BBox bb = g.gallery.bbox();
  Frame F;
  F.xmin = to_double(bb.xmin);
  F.ymax = to_double(bb.ymax);
  const double dx = std::max(1e-9, to_double(bb.xmax) - F.xmin);
  const double dy = std::max(1e-9, F.ymax - to_double(bb.ymin));
  F.s = (width - 2 * F.pad) / std::max(dx, dy);
  F.w = width;
  F.h = static_cast<int>(std::ceil(dy * F.s + 2 * F.pad));

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << F.w << "\" height=\"" << F.h << "\" viewBox=\"0 0 " << F.w
    << " " << F.h << "\">\n";
  o << "<style>\n"
       ".gallery{fill:#e8e8e8;stroke:#333;stroke-width:1.5;fill-rule:evenodd}\n"
       ".skeleton{fill:none;stroke:#333;stroke-width:2}\n"
       ".overlay-region{fill:#4c9be8;fill-opacity:0.35;stroke:#1f5fa8;stroke-width:1;fill-rule:evenodd}\n"
       ".overlay-segments{fill:none;stroke:#1f5fa8;stroke-width:2.5}\n"
       ".overlay-points{fill:#111}\n"
       ".witness{fill:#f2b134;fill-opacity:0.5;stroke:#a86f00;stroke-width:1}\n"
       ".kernel{fill:#2ca02c;fill-opacity:0.4;stroke:#1a661a;stroke-width:1;fill-rule:evenodd}\n"
       ".visibility{fill:#4c9be8;fill-opacity:0.35;stroke:#1f5fa8;stroke-width:1;fill-rule:evenodd}\n"
       "</style>\n";
  if (g.gallery.is_polygonal())
    o << "<path class=\"gallery\" d=\"" << region_path(F, g.gallery.region) << "\"/>\n";
  else
    o << "<path class=\"skeleton\" d=\"" << segment_path(F, g.gallery.skeleton.segments) << "\"/>\n";

  for (const auto& ov : overlays) {
    switch (ov.kind) {
      case Overlay::Kind::Region:
        o << "<path class=\"" << (ov.css_class.empty() ? "overlay-region" : ov.css_class) << "\" d=\""
          << region_path(F, ov.region) << "\"/>\n";
        break;
      case Overlay::Kind::Segments:
        o << "<path class=\"" << (ov.css_class.empty() ? "overlay-segments" : ov.css_class) << "\" d=\""
          << segment_path(F, ov.segments) << "\"/>\n";
        break;
      case Overlay::Kind::Points:
        for (const auto& p : ov.points) {
          const auto c = F.xy(p);
          const auto sp = c.find(' ');
          o << "<circle class=\"" << (ov.css_class.empty() ? "overlay-points" : ov.css_class) << "\" cx=\""
            << c.substr(0, sp) << "\" cy=\"" << c.substr(sp + 1) << "\" r=\"3.000000\"/>\n";
        }
        break;
      case Overlay::Kind::Box:
        if (ov.box) o << "<path class=\"" << (ov.css_class.empty() ? "witness" : ov.css_class) << "\" d=\""
                      << ring_path(F, ov.box->polygon().vertices) << "\"/>\n";
        break;
      case Overlay::Kind::Disc:
      case Overlay::Kind::Ellipse: {
        Eigen::Vector2d c;
        Eigen::Matrix2d A;
        if (ov.disc) c = ov.disc->center, A = ov.disc->radius * Eigen::Matrix2d::Identity();
        else if (ov.ellipse) c = ov.ellipse->center, A = ov.ellipse->A;
        else break;
        std::string d;
        for (int i = 0; i < 96; ++i) {
          const double t = 2 * std::numbers::pi * i / 96;
          const Eigen::Vector2d p = c + A * Eigen::Vector2d(std::cos(t), std::sin(t));
          d += (i ? " L " : "M ") + F.xy(p.x(), p.y());
        }
        o << "<path class=\"" << (ov.css_class.empty() ? "witness" : ov.css_class) << "\" d=\"" << d << " Z\"/>\n";
        break;
      }
    }
  }

  std::size_t ci = 0;
  for (const auto& cl : g.classes) {
    const char* color = kPalette[ci++ % std::size(kPalette)];
    for (const auto& p : cl.points) {
      const auto c = F.xy(p);
      const auto sp = c.find(' ');
      o << "<circle fill=\"" << color << "\" cx=\"" << c.substr(0, sp) << "\" cy=\"" << c.substr(sp + 1)
        << "\" r=\"4.000000\"><title>" << cl.name << "</title></circle>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace krasno::io
