#include "strongconv/io/svg.hpp"

#include "strongconv/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace strongconv::io {

namespace {

struct Style {
  const char* fill;
  const char* stroke;
  double opacity;
};

Style style_of(const std::string& role) {
  if (role == "body") return {"#4a6fa5", "#2b4162", 0.25};
  if (role == "hull") return {"#d1495b", "#8c2f39", 0.35};
  if (role == "region") return {"#66a182", "#3d6651", 0.35};
  if (role == "point") return {"#222222", "#222222", 1.0};
  if (role == "origin") return {"#edae49", "#a4712a", 1.0};
  if (role == "highlight") return {"#d1495b", "#8c2f39", 1.0};
  return {"#999999", "#666666", 0.3};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  double lo[2] = {0, 0}, hi[2] = {0, 0};
  bool first = true;
  auto include = [&](const numeric::Vector& p) {
    if (p.size() != 2) throw InputError("SVG scenes are planar; select a section for 3D data");
    for (int i = 0; i < 2; ++i) {
      const double v = numeric::to_double(p[static_cast<std::size_t>(i)]);
      if (first || v < lo[i]) lo[i] = v;
      if (first || v > hi[i]) hi[i] = v;
    }
    first = false;
  };
  for (const auto& s : scene.shapes)
    for (const auto& v : s.polygon) include(v);
  for (const auto& m : scene.marks) include(m.point);
  if (first) throw InputError("empty SVG scene");
  double w = hi[0] - lo[0], h = hi[1] - lo[1];
  if (w <= 0) w = std::max(h, 1.0);
  if (h <= 0) h = std::max(w, 1.0);
  const double x0 = lo[0] - 0.05 * w, y1 = lo[1] + h + 0.05 * h;
  const double fw = 1.1 * w, fh = 1.1 * h;
  const double scale = 600.0 / std::max(fw, fh);
  const double cw = fw * scale, ch = fh * scale;
  auto px = [&](const numeric::Vector& p) { return (numeric::to_double(p[0]) - x0) * scale; };
  auto py = [&](const numeric::Vector& p) { return (y1 - numeric::to_double(p[1])) * scale; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(cw) + " " + num(ch) + "\" width=\"" + num(cw) +
                    "\" height=\"" + num(ch) + "\">\n";
  for (const auto& s : scene.shapes) {
    const Style st = style_of(s.role);
    std::string d;
    for (std::size_t i = 0; i < s.polygon.size(); ++i) {
      d += (i ? " L " : "M ") + num(px(s.polygon[i])) + " " + num(py(s.polygon[i]));
    }
    if (s.polygon.size() >= 3) d += " Z";
    out += "  <path class=\"" + s.role + "\" d=\"" + d + "\" fill=\"" + st.fill + "\" fill-opacity=\"" + num(st.opacity) +
           "\" stroke=\"" + st.stroke + "\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& m : scene.marks) {
    const Style st = style_of(m.role);
    out += "  <circle class=\"" + m.role + "\" cx=\"" + num(px(m.point)) + "\" cy=\"" + num(py(m.point)) + "\" r=\"3\" fill=\"" +
           st.fill + "\" stroke=\"" + st.stroke + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const SvgScene& scene, const std::string& path) {
  const std::string text = render_svg(scene);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace strongconv::io
