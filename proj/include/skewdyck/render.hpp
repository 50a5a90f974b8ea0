// TikZ and SVG emitters for path diagrams.
#pragma once

#include "skewdyck/paths.hpp"

#include <string>
#include <vector>

namespace skewdyck {

struct RenderOptions {
  GeometryMode geometry = GeometryMode::RedOverlay;
  bool mirror = false;     // right-to-left reading: reflect x
  int per_row = 6;
  std::string caption;     // empty: no caption
};

/// One tikzpicture: help-line grid, thick black polyline, red L segments.
std::string tikz_picture(const PathGeometry& geometry, bool mirror = false);

/// A standalone LaTeX document with one tikzpicture per word.
std::string render_tikz(const std::vector<SkewWord>& words, const RenderOptions& options);

/// An SVG 1.1 document with one <g class="diagram"> per word.
std::string render_svg(const std::vector<SkewWord>& words, const RenderOptions& options);

}  // namespace skewdyck
