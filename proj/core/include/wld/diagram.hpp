#pragma once

// Gauss-code representation of virtual/welded link and string link diagrams.
//
// Virtual crossings are not stored: virtual moves and planar isotopy act
// trivially on Gauss codes, so a diagram is just the ordered list of
// classical passages met along each oriented component.

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wld {

enum class Role : unsigned char { over, under };

constexpr Role opposite(Role r) noexcept {
  return r == Role::over ? Role::under : Role::over;
}

struct Passage {
  int crossing = 0;
  Role role = Role::over;
  int sign = 1;

  auto operator<=>(const Passage&) const = default;
};

enum class DiagramKind : unsigned char { link, string_link };

using Component = std::vector<Passage>;

/// Location of a passage: component index and position along it.
struct Position {
  int component = 0;
  int index = 0;

  auto operator<=>(const Position&) const = default;
};

/// Where the two passages of one crossing sit.
struct CrossingInfo {
  Position over;
  Position under;
  int sign = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class Diagram {
 public:
  /// Crossing-free unknot.
  Diagram();

  /// Validates the passage lists; throws std::invalid_argument on a
  /// malformed code (crossing not used exactly once as over and once as
  /// under, or sign mismatch).
  Diagram(DiagramKind kind, std::vector<Component> components);

  static Diagram unlink(int mu);
  static Diagram trivial_string_link(int mu);

  DiagramKind kind() const noexcept { return kind_; }
  bool is_string_link() const noexcept { return kind_ == DiagramKind::string_link; }
  int mu() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  /// Crossing ids in increasing order.
  std::vector<int> crossing_ids() const;
  const CrossingInfo& crossing(int id) const;
  bool has_crossing(int id) const noexcept { return crossings_.count(id) != 0; }
  int max_crossing_id() const noexcept;

  const Passage& at(Position p) const;

  /// Index of the passage following / preceding `index` on component `c`,
  /// or -1 at the end of an open strand.
  int next_index(int c, int index) const noexcept;
  int prev_index(int c, int index) const noexcept;

  /// Same passages with crossing ids renumbered 1..c in increasing order.
  Diagram compacted() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.kind_ == b.kind_ && a.components_ == b.components_;
  }

 private:
  DiagramKind kind_ = DiagramKind::link;
  std::vector<Component> components_;
  std::map<int, CrossingInfo> crossings_;
};

Diagram parse_diagram(std::string_view text);
std::string serialize(const Diagram& d);

/// Closes every strand of a string link into a circle.
Diagram closure(const Diagram& s);

/// One arc per under-passage on a closed component (a single closed arc if
/// there is none); open strands carry one extra arc. Each arc ends at the
/// under-passage it enters (inclusive), or at the strand end.
struct Arc {
  int component = 0;
  int begin = 0;
  int length = 0;

  auto operator<=>(const Arc&) const = default;
};

std::vector<Arc> arcs(const Diagram& d);

/// Arc bookkeeping used by the group presentations.
struct ArcMap {
  std::vector<Arc> arcs;
  /// generator index of the arc containing each passage, per component
  std::vector<std::vector<int>> arc_of;
  /// for each under-passage: the arc leaving it
  std::vector<std::vector<int>> arc_after;
};

ArcMap arc_map(const Diagram& d);

/// Canonical representative up to crossing relabelling and (for closed
/// components) basepoint rotation. Component order is preserved.
Diagram canonical(const Diagram& d);
std::string canonical_key(const Diagram& d);

/// Basepoint of component `c` moved to position `shift`.
Diagram rotated(const Diagram& d, int c, int shift);

/// Every component's orientation reversed (signs are unchanged: reversing
/// both strands at a crossing keeps its sign).
Diagram reversed(const Diagram& d);

}  // namespace wld
