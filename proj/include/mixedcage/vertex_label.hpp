#ifndef MIXEDCAGE_VERTEX_LABEL_HPP
#define MIXEDCAGE_VERTEX_LABEL_HPP

// Structured vertex labels shared by every construction.
//
// Labels are ordered first by kind (the order of alternatives in the
// variant), then by payload. That order is the canonical vertex order of
// every MixedGraph, and therefore of every export.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mixedcage/finite_field.hpp"

namespace mixedcage {

namespace labels {

/// Affine point (x,y).
struct Point {
  FieldElement x, y;
  friend auto operator<=>(const Point&, const Point&) = default;
};
/// Affine line [m,b]: y = m*x + b.
struct Line {
  FieldElement m, b;
  friend auto operator<=>(const Line&, const Line&) = default;
};
struct PointCopy {
  FieldElement x, y;
  friend auto operator<=>(const PointCopy&, const PointCopy&) = default;
};
struct LineCopy {
  FieldElement m, b;
  friend auto operator<=>(const LineCopy&, const LineCopy&) = default;
};
/// P_i: the point at infinity shared by all lines of slope i.
struct ClassPoint {
  FieldElement i;
  friend auto operator<=>(const ClassPoint&, const ClassPoint&) = default;
};
/// L_i: the vertical line x = i.
struct ClassLine {
  FieldElement i;
  friend auto operator<=>(const ClassLine&, const ClassLine&) = default;
};
struct InfPoint {
  friend auto operator<=>(const InfPoint&, const InfPoint&) = default;
};
struct InfLine {
  friend auto operator<=>(const InfLine&, const InfLine&) = default;
};
struct Plain {
  std::uint64_t index = 0;
  friend auto operator<=>(const Plain&, const Plain&) = default;
};
/// Tree node addressed by its position on the level-0 path followed by the
/// child index taken at each deeper level.
struct TreeNode {
  std::vector<std::uint32_t> path;
  friend auto operator<=>(const TreeNode&, const TreeNode&) = default;
};

}  // namespace labels

class VertexLabel {
 public:
  using Payload =
      std::variant<labels::Point, labels::Line, labels::PointCopy,
                   labels::LineCopy, labels::ClassPoint, labels::ClassLine,
                   labels::InfPoint, labels::InfLine, labels::Plain,
                   labels::TreeNode>;

  VertexLabel() : payload_(labels::Plain{}) {}
  template <typename T>
    requires std::is_constructible_v<Payload, T>
  VertexLabel(T value) : payload_(std::move(value)) {}  // NOLINT implicit

  const Payload& payload() const { return payload_; }
  std::size_t kind() const { return payload_.index(); }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(payload_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(payload_);
  }

  /// Field order used by the payload, if it carries field elements.
  std::optional<std::uint32_t> field_order() const {
    return std::visit(
        [](const auto& p) -> std::optional<std::uint32_t> {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, labels::Point> ||
                        std::is_same_v<T, labels::PointCopy>)
            return p.x.order;
          else if constexpr (std::is_same_v<T, labels::Line> ||
                             std::is_same_v<T, labels::LineCopy>)
            return p.m.order;
          else if constexpr (std::is_same_v<T, labels::ClassPoint> ||
                             std::is_same_v<T, labels::ClassLine>)
            return p.i.order;
          else
            return std::nullopt;
        },
        payload_);
  }

  friend std::strong_ordering operator<=>(const VertexLabel& a,
                                          const VertexLabel& b) {
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    return std::visit(
        [&](const auto& lhs) -> std::strong_ordering {
          using T = std::decay_t<decltype(lhs)>;
          const auto& rhs = std::get<T>(b.payload_);
          if (lhs < rhs) return std::strong_ordering::less;
          if (rhs < lhs) return std::strong_ordering::greater;
          return std::strong_ordering::equal;
        },
        a.payload_);
  }
  friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return (a <=> b) == 0;
  }

 private:
  Payload payload_;
};

// Shorthand constructors.
inline VertexLabel point(FieldElement x, FieldElement y) {
  return labels::Point{x, y};
}
inline VertexLabel line(FieldElement m, FieldElement b) {
  return labels::Line{m, b};
}
inline VertexLabel point_copy(FieldElement x, FieldElement y) {
  return labels::PointCopy{x, y};
}
inline VertexLabel line_copy(FieldElement m, FieldElement b) {
  return labels::LineCopy{m, b};
}
inline VertexLabel class_point(FieldElement i) { return labels::ClassPoint{i}; }
inline VertexLabel class_line(FieldElement i) { return labels::ClassLine{i}; }
inline VertexLabel inf_point() { return labels::InfPoint{}; }
inline VertexLabel inf_line() { return labels::InfLine{}; }
inline VertexLabel plain(std::uint64_t index) { return labels::Plain{index}; }
inline VertexLabel tree_node(std::vector<std::uint32_t> path) {
  return labels::TreeNode{std::move(path)};
}

/// ASCII rendering: (x,y) [m,b] (x',y') [m',b'] P_i L_i P_inf L_inf n7 t2.0.1
inline std::string to_string(const VertexLabel& label) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, labels::Point>)
          return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
        else if constexpr (std::is_same_v<T, labels::Line>)
          return "[" + to_string(p.m) + "," + to_string(p.b) + "]";
        else if constexpr (std::is_same_v<T, labels::PointCopy>)
          return "(" + to_string(p.x) + "'," + to_string(p.y) + "')";
        else if constexpr (std::is_same_v<T, labels::LineCopy>)
          return "[" + to_string(p.m) + "'," + to_string(p.b) + "']";
        else if constexpr (std::is_same_v<T, labels::ClassPoint>)
          return "P_" + to_string(p.i);
        else if constexpr (std::is_same_v<T, labels::ClassLine>)
          return "L_" + to_string(p.i);
        else if constexpr (std::is_same_v<T, labels::InfPoint>)
          return "P_inf";
        else if constexpr (std::is_same_v<T, labels::InfLine>)
          return "L_inf";
        else if constexpr (std::is_same_v<T, labels::Plain>)
          return "n" + std::to_string(p.index);
        else {
          std::string out = "t";
          for (std::size_t k = 0; k < p.path.size(); ++k) {
            if (k > 0) out += '.';
            out += std::to_string(p.path[k]);
          }
          return out;
        }
      },
      label.payload());
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_VERTEX_LABEL_HPP
