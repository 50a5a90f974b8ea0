#include "skewdyck/paths.hpp"

#include <algorithm>

namespace skewdyck {

std::optional<Step> step_from_char(char c) {
  switch (c) {
    case 'U': return Step::U;
    case 'D': return Step::D;
    case 'L': return Step::L;
    default: return std::nullopt;
  }
}

SkewWord::SkewWord(int t, std::vector<Step> steps) : t_(t), steps_(std::move(steps)) {
  if (t < 2) throw std::invalid_argument("down-step magnitude t must be >= 2");
}

SkewWord SkewWord::parse(int t, std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto s = step_from_char(text[i]);
    if (!s) {
      throw std::invalid_argument("invalid step '" + std::string(1, text[i]) + "' at index " +
                                  std::to_string(i) + " (expected U, D or L)");
    }
    steps.push_back(*s);
  }
  return SkewWord(t, std::move(steps));
}

int SkewWord::final_level() const {
  int level = 0;
  for (Step s : steps_) level += level_delta(s, t_);
  return level;
}

std::string SkewWord::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(to_char(s));
  return out;
}

std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::NegativeLevel: return "negative level";
    case Violation::UpThenLeft: return "UL forbidden";
    case Violation::LeftThenUp: return "LU forbidden";
    case Violation::FirstNotUp: return "first step must be U";
  }
  return "?";
}

Validation validate(const SkewWord& word) {
  const auto& steps = word.steps();
  auto fail = [](Violation rule, std::size_t index) {
    Validation v;
    v.rule = rule;
    v.index = index;
    v.message = std::string(violation_name(rule)) + " at index " + std::to_string(index);
    return v;
  };
  if (!steps.empty() && steps.front() != Step::U) return fail(Violation::FirstNotUp, 0);
  int level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) {
      // Report the pair at the index of its first letter, e.g. "UUL" -> 1.
      if (steps[i - 1] == Step::U && steps[i] == Step::L) return fail(Violation::UpThenLeft, i - 1);
      if (steps[i - 1] == Step::L && steps[i] == Step::U) return fail(Violation::LeftThenUp, i - 1);
    }
    level += level_delta(steps[i], word.t());
    if (level < 0) return fail(Violation::NegativeLevel, i);
  }
  return {};
}

bool is_closed(const SkewWord& word) { return word.final_level() == 0; }

namespace {

struct Enumerator {
  int t;
  int n;
  bool closed_only;
  std::vector<Step> current;
  std::vector<SkewWord> out;

  void run(int level) {
    const int depth = static_cast<int>(current.size());
    if (depth == n) {
      if (!closed_only || level == 0) out.emplace_back(t, current);
      return;
    }
    const int remaining_after = n - depth - 1;
    for (Step s : {Step::U, Step::D, Step::L}) {
      if (depth == 0 && s != Step::U) continue;
      if (depth > 0) {
        const Step prev = current.back();
        if ((prev == Step::U && s == Step::L) || (prev == Step::L && s == Step::U)) continue;
      }
      const int next = level + level_delta(s, t);
      if (next < 0) continue;
      if (closed_only && next > t * remaining_after) continue;
      current.push_back(s);
      run(next);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<SkewWord> enumerate(int t, int n, bool closed_only, int cap) {
  if (t < 2) throw std::invalid_argument("enumerate: t must be >= 2");
  if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
  if (n > cap) {
    throw EnumerationCapExceeded("enumerate: length " + std::to_string(n) +
                                 " exceeds the enumeration cap " + std::to_string(cap) +
                                 "; use the DP counter (dp_counts / `skewdyck count`) instead");
  }
  Enumerator e{t, n, closed_only, {}, {}};
  e.current.reserve(static_cast<std::size_t>(n));
  e.run(0);
  return std::move(e.out);
}

// --- geometry ---------------------------------------------------------------

std::vector<Point> PathGeometry::vertices() const {
  std::vector<Point> pts;
  pts.reserve(segments.size() + 1);
  pts.push_back(segments.empty() ? Point{} : segments.front().from);
  for (const auto& s : segments) pts.push_back(s.to);
  return pts;
}

int PathGeometry::min_x() const {
  int m = 0;
  for (const auto& p : vertices()) m = std::min(m, p.x);
  return m;
}

int PathGeometry::max_x() const {
  int m = 0;
  for (const auto& p : vertices()) m = std::max(m, p.x);
  return m;
}

int PathGeometry::max_y() const {
  int m = 0;
  for (const auto& p : vertices()) m = std::max(m, p.y);
  return m;
}

PathGeometry realize(const SkewWord& word, GeometryMode mode) {
  PathGeometry g;
  g.t = word.t();
  g.mode = mode;
  g.segments.reserve(word.size());
  const int stretch = mode == GeometryMode::Unstretched ? 1 : 2;
  Point at{};
  for (Step s : word.steps()) {
    Point next = at;
    SegmentColor color = SegmentColor::Black;
    switch (s) {
      case Step::U:
        next.x += 1;
        next.y += 1;
        break;
      case Step::D:
        next.x += stretch;
        next.y -= word.t();
        break;
      case Step::L:
        next.x += mode == GeometryMode::LeftStep ? -2 : stretch;
        next.y -= word.t();
        color = SegmentColor::Red;
        break;
    }
    g.segments.push_back({at, next, color});
    at = next;
  }
  return g;
}

namespace {

long cross(long ax, long ay, long bx, long by) { return ax * by - ay * bx; }
long dot(long ax, long ay, long bx, long by) { return ax * bx + ay * by; }

// Collinear and the shared part is a segment of positive length.
bool overlaps(const Segment& a, const Segment& b) {
  const long dx = a.to.x - a.from.x;
  const long dy = a.to.y - a.from.y;
  const long ex = b.to.x - b.from.x;
  const long ey = b.to.y - b.from.y;
  if (cross(dx, dy, ex, ey) != 0) return false;
  if (cross(dx, dy, b.from.x - a.from.x, b.from.y - a.from.y) != 0) return false;
  // Project b's endpoints on a's direction; a spans [0, |d|^2].
  const long len2 = dot(dx, dy, dx, dy);
  long p = dot(dx, dy, b.from.x - a.from.x, b.from.y - a.from.y);
  long q = dot(dx, dy, b.to.x - a.from.x, b.to.y - a.from.y);
  if (p > q) std::swap(p, q);
  return std::min(q, len2) > std::max(p, 0L);
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> overlap_diagnostic(const PathGeometry& geometry) {
  std::vector<std::pair<std::size_t, std::size_t>> found;
  const auto& segs = geometry.segments;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (overlaps(segs[i], segs[j])) found.emplace_back(i, j);
  return found;
}

std::vector<std::pair<std::size_t, std::size_t>> overlap_diagnostic(const SkewWord& word) {
  return overlap_diagnostic(realize(word, GeometryMode::LeftStep));
}

}  // namespace skewdyck
