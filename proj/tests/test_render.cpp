#include "skewdyck/render.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace skewdyck;

namespace {

std::size_t occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1))
    ++n;
  return n;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<SkewWord> plain_words(int n) {
  auto words = enumerate(2, n, true);
  std::erase_if(words, [](const SkewWord& w) { return w.str().find('L') != std::string::npos; });
  return words;
}

}  // namespace

TEST_CASE("diagram counts at n = 9") {
  RenderOptions plain;
  plain.geometry = GeometryMode::Unstretched;
  const auto tikz_plain = render_tikz(plain_words(9), plain);
  CHECK(occurrences(tikz_plain, "\\begin{tikzpicture}") == 12);
  CHECK(tikz_plain.find("% diagrams: 12\n") != std::string::npos);

  const RenderOptions skew;
  const auto tikz_skew = render_tikz(enumerate(2, 9, true), skew);
  CHECK(occurrences(tikz_skew, "\\begin{tikzpicture}") == 19);
  const auto svg_skew = render_svg(enumerate(2, 9, true), skew);
  CHECK(occurrences(svg_skew, "<g class=\"diagram\"") == 19);
  CHECK(svg_skew.find("version=\"1.1\"") != std::string::npos);

  CHECK(occurrences(render_tikz(enumerate(2, 3, true), skew), "\\begin{tikzpicture}") == 1);
}

TEST_CASE("tikz picture structure") {
  const auto pic = tikz_picture(realize(SkewWord::parse(2, "UUUUDL")));
  CHECK(pic.find("\\begin{tikzpicture}[scale=0.2]") == 0);
  CHECK(pic.find("\\draw[help lines] (0,0) grid (8,5);") != std::string::npos);
  CHECK(pic.find("\\draw [thick] (0,0) -- (1,1) -- (2,2) -- (3,3) -- (4,4) -- (6,2) -- (8,0);") !=
        std::string::npos);
  CHECK(pic.find("\\draw [thick,red]") != std::string::npos);
  CHECK(pic.find("(6+0.25,2) -- (8,0+0.25)") != std::string::npos);

  const auto mirrored = tikz_picture(realize(SkewWord::parse(2, "UUD")), true);
  CHECK(mirrored.find("xscale=-1") != std::string::npos);
}

TEST_CASE("golden: skew tikz, n = 6") {
  RenderOptions options;
  options.caption = "Closed paths of length 6 (t = 2): 4";
  CHECK(render_tikz(enumerate(2, 6, true), options) == golden("skew_t2_n6.tex"));
}

TEST_CASE("golden: left-step tikz, mirrored, n = 6") {
  RenderOptions options;
  options.geometry = GeometryMode::LeftStep;
  options.mirror = true;
  options.caption = "Closed paths of length 6 (t = 2): 4";
  CHECK(render_tikz(enumerate(2, 6, true), options) == golden("left_mirror_t2_n6.tex"));
}

TEST_CASE("golden: skew svg, n = 6") {
  RenderOptions options;
  options.caption = "Closed paths of length 6 (t = 2): 4";
  CHECK(render_svg(enumerate(2, 6, true), options) == golden("skew_t2_n6.svg"));
}

TEST_CASE("empty input still yields a document") {
  const RenderOptions options;
  const auto doc = render_tikz({}, options);
  CHECK(doc.find("% diagrams: 0") != std::string::npos);
  CHECK(doc.find("\\end{document}") != std::string::npos);
}
