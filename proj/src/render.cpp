#include "skewdyck/render.hpp"

#include <algorithm>
#include <sstream>

namespace skewdyck {

namespace {

std::string point(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Red L segments sit 0.25 off the black D they overlay.
std::string nudged_segment(const Segment& s) {
  return "(" + std::to_string(s.from.x) + "+0.25," + std::to_string(s.from.y) + ") -- (" +
         std::to_string(s.to.x) + "," + std::to_string(s.to.y) + "+0.25)";
}

}  // namespace

std::string tikz_picture(const PathGeometry& g, bool mirror) {
  std::ostringstream out;
  const std::string indent = mirror ? "\t\t" : "\t";
  out << "\\begin{tikzpicture}[scale=0.2]\n";
  if (mirror) out << "\t\\begin{scope}[xscale=-1,yscale=1]\n";
  out << indent << "\\draw[help lines] (" << g.min_x() << ",0) grid (" << g.max_x() << ","
      << g.max_y() + 1 << ");\n";
  if (!g.segments.empty()) {
    out << indent << "\\draw [thick] ";
    const auto pts = g.vertices();
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " -- " : "") << point(pts[i]);
    out << ";\n";
    for (const auto& s : g.segments) {
      if (s.color != SegmentColor::Red) continue;
      out << indent << "\\draw [thick,red] ";
      if (g.mode == GeometryMode::LeftStep) out << point(s.from) << " -- " << point(s.to);
      else out << nudged_segment(s);
      out << ";\n";
    }
  }
  if (mirror) out << "\t\\end{scope}\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_tikz(const std::vector<SkewWord>& words, const RenderOptions& options) {
  std::ostringstream out;
  out << "\\documentclass{article}\n"
      << "\\usepackage{tikz}\n"
      << "\\begin{document}\n"
      << "% diagrams: " << words.size() << "\n"
      << "\\begin{figure}[h]\n";
  const int per_row = std::max(1, options.per_row);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0 && i % static_cast<std::size_t>(per_row) == 0) out << "\n";
    out << "% " << (words[i].empty() ? "(empty)" : words[i].str()) << "\n";
    out << tikz_picture(realize(words[i], options.geometry), options.mirror);
  }
  if (!options.caption.empty()) out << "\\caption{" << options.caption << "}\n";
  out << "\\end{figure}\n"
      << "\\end{document}\n";
  return out.str();
}

namespace {

constexpr int kUnit = 10;
constexpr int kMargin = 10;

}  // namespace

std::string render_svg(const std::vector<SkewWord>& words, const RenderOptions& options) {
  std::vector<PathGeometry> shapes;
  shapes.reserve(words.size());
  for (const auto& w : words) shapes.push_back(realize(w, options.geometry));

  int span_x = 1;
  int span_y = 1;
  for (const auto& g : shapes) {
    span_x = std::max(span_x, g.max_x() - g.min_x());
    span_y = std::max(span_y, g.max_y() + 1);
  }
  const int cell_w = span_x * kUnit + 2 * kMargin;
  const int cell_h = span_y * kUnit + 2 * kMargin;
  const int per_row = std::max(1, options.per_row);
  const int cols = std::max(1, std::min(per_row, static_cast<int>(shapes.size())));
  const int rows = std::max(1, static_cast<int>((shapes.size() + per_row - 1) / per_row));
  const int caption_h = options.caption.empty() ? 0 : 20;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cols * cell_w
      << "\" height=\"" << rows * cell_h + caption_h << "\">\n"
      << "<!-- diagrams: " << shapes.size() << " -->\n";

  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto& g = shapes[i];
    const int ox = static_cast<int>(i % per_row) * cell_w + kMargin;
    const int oy = static_cast<int>(i / per_row) * cell_h + kMargin;
    const int lo = g.min_x();
    const int hi = g.max_x();
    const int top = g.max_y() + 1;
    auto sx = [&](int x) { return ox + (options.mirror ? hi - x : x - lo) * kUnit; };
    auto sy = [&](int y) { return oy + (span_y - y) * kUnit; };

    out << "<g class=\"diagram\" data-word=\"" << words[i].str() << "\">\n";
    out << "  <g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
    for (int x = lo; x <= hi; ++x)
      out << "    <line x1=\"" << sx(x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(x) << "\" y2=\""
          << sy(top) << "\"/>\n";
    for (int y = 0; y <= top; ++y)
      out << "    <line x1=\"" << sx(lo) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(hi)
          << "\" y2=\"" << sy(y) << "\"/>\n";
    out << "  </g>\n";
    if (!g.segments.empty()) {
      out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
      const auto pts = g.vertices();
      for (std::size_t k = 0; k < pts.size(); ++k)
        out << (k ? " " : "") << sx(pts[k].x) << "," << sy(pts[k].y);
      out << "\"/>\n";
      const double nudge = g.mode == GeometryMode::LeftStep ? 0.0 : 0.25 * kUnit;
      const double dir = options.mirror ? -1.0 : 1.0;
      for (const auto& s : g.segments) {
        if (s.color != SegmentColor::Red) continue;
        out << "  <line class=\"red\" stroke=\"red\" stroke-width=\"1.5\" x1=\""
            << sx(s.from.x) + dir * nudge << "\" y1=\"" << sy(s.from.y) << "\" x2=\""
            << sx(s.to.x) << "\" y2=\"" << sy(s.to.y) - nudge << "\"/>\n";
      }
    }
    out << "</g>\n";
  }
  if (!options.caption.empty()) {
    out << "<text x=\"" << kMargin << "\" y=\"" << rows * cell_h + caption_h - 5
        << "\" font-family=\"serif\" font-size=\"12\">" << options.caption << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace skewdyck
