// Skew t-Dyck words: the step alphabet, the syntactic validator, exhaustive
// enumeration and realization as lattice polylines.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewdyck {

/// Up (+1), down (-t), left down (-t, drawn to the left or in red).
enum class Step : char { U = 'U', D = 'D', L = 'L' };

constexpr char to_char(Step s) { return static_cast<char>(s); }
std::optional<Step> step_from_char(char c);

/// Level change of a step for down-step magnitude t.
constexpr int level_delta(Step s, int t) { return s == Step::U ? 1 : -t; }

/// A word over {U, D, L} with its down-step magnitude. Not necessarily valid;
/// see validate().
class SkewWord {
 public:
  SkewWord() = default;
  SkewWord(int t, std::vector<Step> steps);

  /// Throws std::invalid_argument on characters outside "UDL" or t < 2.
  static SkewWord parse(int t, std::string_view text);

  int t() const { return t_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  /// Level after all steps (may be negative for invalid words).
  int final_level() const;
  std::string str() const;

  friend bool operator==(const SkewWord&, const SkewWord&) = default;

 private:
  int t_ = 2;
  std::vector<Step> steps_;
};

enum class Violation {
  None,
  NegativeLevel,
  UpThenLeft,   // UL
  LeftThenUp,   // LU
  FirstNotUp,
};

std::string_view violation_name(Violation v);

struct Validation {
  Violation rule = Violation::None;
  std::size_t index = 0;  // step index where the rule is first broken
  std::string message;

  bool ok() const { return rule == Violation::None; }
  explicit operator bool() const { return ok(); }
};

/// Checks the prefix-level, UL/LU and first-step rules; reports the first
/// violation by step index. Invalid words are not errors.
Validation validate(const SkewWord& word);

/// Final level is zero. Precondition: the word validates.
bool is_closed(const SkewWord& word);

/// Enumeration refuses lengths above this; use the DP counter beyond it.
inline constexpr int kEnumerationCap = 24;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All valid words of length n (closed ones only when closed_only), in
/// lexicographic order with U < D < L.
std::vector<SkewWord> enumerate(int t, int n, bool closed_only, int cap = kEnumerationCap);

// --- geometry --------------------------------------------------------------

enum class GeometryMode {
  Unstretched,  // U=(1,1), D=(1,-t); L=(1,-t) in red
  RedOverlay,   // U=(1,1), D=(2,-t), L drawn as (2,-t) in red
  LeftStep,     // U=(1,1), D=(2,-t), L=(-2,-t)
};

enum class SegmentColor { Black, Red };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point from;
  Point to;
  SegmentColor color = SegmentColor::Black;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct PathGeometry {
  int t = 2;
  GeometryMode mode = GeometryMode::RedOverlay;
  std::vector<Segment> segments;

  /// Start point followed by every segment end.
  std::vector<Point> vertices() const;
  int min_x() const;
  int max_x() const;
  int max_y() const;
};

/// Realizes a valid word starting at the origin.
PathGeometry realize(const SkewWord& word, GeometryMode mode = GeometryMode::RedOverlay);

/// Pairs (i, j), i < j, of collinear segments sharing more than one point.
/// Meaningful in LeftStep mode, where the path can fold back on itself.
std::vector<std::pair<std::size_t, std::size_t>> overlap_diagnostic(const PathGeometry& geometry);
std::vector<std::pair<std::size_t, std::size_t>> overlap_diagnostic(const SkewWord& word);

}  // namespace skewdyck
