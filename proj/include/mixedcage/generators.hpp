#ifndef MIXEDCAGE_GENERATORS_HPP
#define MIXEDCAGE_GENERATORS_HPP

// Constructions of mixed graphs: projective and biaffine incidence graphs,
// circulant digraphs, the bipartite circulants joining a biaffine graph to
// its copy, the girth-6 family built from them, the 30-vertex [1,3;6] cage
// obtained by surgery on the projective plane of order 4, and the mixed
// Moore tree together with the lower-bound witness built on it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixedcage/finite_field.hpp"
#include "mixedcage/mixed_graph.hpp"
#include "mixedcage/vertex_label.hpp"

namespace mixedcage {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_field_order(std::uint32_t q) {
  if (!is_supported_field_order(q))
    throw GeneratorError("unsupported field order " + std::to_string(q) +
                         " (need a prime or 4)");
}

}  // namespace detail

/// Incidence graph of PG(2,q): (q+1)-regular, 2q^2+2q+2 vertices, girth 6.
inline MixedGraph gen_projective_incidence(std::uint32_t q) {
  detail::require_field_order(q);
  const auto field = field_elements(q);
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> edges;
  vertices.reserve(2 * q * q + 2 * q + 2);

  for (auto a : field)
    for (auto b : field) {
      vertices.push_back(point(a, b));
      vertices.push_back(line(a, b));
    }
  for (auto i : field) {
    vertices.push_back(class_point(i));
    vertices.push_back(class_line(i));
  }
  vertices.push_back(inf_point());
  vertices.push_back(inf_line());

  for (auto m : field)
    for (auto b : field)
      for (auto x : field)
        edges.emplace_back(line(m, b), point(x, fe_add(fe_mul(m, x), b)));
  for (auto i : field) {
    for (auto j : field) {
      edges.emplace_back(class_line(i), point(i, j));
      edges.emplace_back(class_point(i), line(i, j));
    }
    edges.emplace_back(inf_line(), class_point(i));
    edges.emplace_back(inf_point(), class_line(i));
  }
  edges.emplace_back(inf_line(), inf_point());
  return build_graph(std::move(vertices), std::move(edges), {});
}

/// Everything gen_projective_incidence adds beyond the affine points and
/// lines: the class points/lines and the two infinity elements.
inline std::vector<VertexLabel> projective_extra_vertices(std::uint32_t q) {
  detail::require_field_order(q);
  std::vector<VertexLabel> out;
  for (auto i : field_elements(q)) {
    out.push_back(class_point(i));
    out.push_back(class_line(i));
  }
  out.push_back(inf_point());
  out.push_back(inf_line());
  return out;
}

/// Biaffine incidence graph B_q: points (x,y), lines [m,b], edge iff
/// y = m*x + b.
inline MixedGraph gen_biaffine(std::uint32_t q) {
  detail::require_field_order(q);
  const auto field = field_elements(q);
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> edges;
  for (auto a : field)
    for (auto b : field) {
      vertices.push_back(point(a, b));
      vertices.push_back(line(a, b));
    }
  for (auto m : field)
    for (auto b : field)
      for (auto x : field)
        edges.emplace_back(line(m, b), point(x, fe_add(fe_mul(m, x), b)));
  return build_graph(std::move(vertices), std::move(edges), {});
}

/// Circulant digraph on n0..n{q-1} with arcs a -> a+i (mod q) per jump i.
inline MixedGraph gen_circulant(std::uint64_t q,
                                const std::vector<std::uint64_t>& jumps) {
  if (q < 2) throw GeneratorError("circulant needs q >= 2");
  if (jumps.empty()) throw GeneratorError("circulant needs at least one jump");
  std::set<std::uint64_t> seen;
  for (auto j : jumps) {
    if (j == 0 || j >= q)
      throw GeneratorError("circulant jump " + std::to_string(j) +
                           " outside [1, " + std::to_string(q - 1) + "]");
    if (!seen.insert(j).second)
      throw GeneratorError("repeated circulant jump " + std::to_string(j));
  }
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> arcs;
  for (std::uint64_t a = 0; a < q; ++a) vertices.push_back(plain(a));
  for (std::uint64_t a = 0; a < q; ++a)
    for (auto j : jumps) arcs.emplace_back(plain(a), plain((a + j) % q));
  return build_graph(std::move(vertices), {}, std::move(arcs));
}

// ---------------------------------------------------------------------------
// Girth-6 family.

enum class CirculantSide { Line, Point };

/// Jump sets of a bipartite circulant, measured on the second coordinate:
/// v -> v' + j for j in to_copy, v' -> v + j for j in to_orig.
struct JumpSets {
  std::vector<std::uint32_t> to_copy;
  std::vector<std::uint32_t> to_orig;
};

struct FamilyParams {
  std::uint32_t q = 0;
  std::uint32_t p = 0;  // (q - 1) / 2
  std::uint32_t z = 0;  // arcs in and out per vertex
  std::uint32_t r = 0;  // edges per vertex

  bool p_odd() const { return p % 2 == 1; }

  /// p odd: to_copy = {0..(p-1)/2}, to_orig = {1..(p+1)/2};
  /// p even: to_copy = {0..p/2-1}, to_orig = {1..p/2}.
  JumpSets default_jumps() const {
    JumpSets js;
    for (std::uint32_t j = 0; j < z; ++j) js.to_copy.push_back(j);
    for (std::uint32_t j = 1; j <= z; ++j) js.to_orig.push_back(j);
    return js;
  }
};

inline FamilyParams family_params(std::uint32_t q) {
  if (q < 3 || !is_prime(q))
    throw GeneratorError("family needs a prime q >= 3, got " +
                         std::to_string(q));
  FamilyParams fp;
  fp.q = q;
  fp.p = (q - 1) / 2;
  fp.z = fp.p % 2 == 1 ? (fp.p + 1) / 2 : fp.p / 2;
  fp.r = q;
  return fp;
}

namespace detail {

inline void check_jumps(std::uint32_t q, const std::vector<std::uint32_t>& js,
                        std::uint32_t lowest, const char* name) {
  std::set<std::uint32_t> seen;
  for (auto j : js) {
    if (j < lowest || j >= q)
      throw GeneratorError(std::string(name) + " jump " + std::to_string(j) +
                           " outside [" + std::to_string(lowest) + ", " +
                           std::to_string(q - 1) + "]");
    if (!seen.insert(j).second)
      throw GeneratorError(std::string("repeated ") + name + " jump " +
                           std::to_string(j));
  }
}

inline void check_bicirculant(std::uint32_t q, const JumpSets& jumps) {
  if (q < 3 || !is_prime(q))
    throw GeneratorError("bipartite circulant needs a prime q >= 3, got " +
                         std::to_string(q));
  check_jumps(q, jumps.to_copy, 0, "to-copy");
  check_jumps(q, jumps.to_orig, 1, "to-original");
}

// Appends the vertices and arcs of C_m (Line side) or C_x (Point side).
inline void append_bicirculant(std::uint32_t q, CirculantSide side,
                               FieldElement index, const JumpSets& jumps,
                               std::vector<VertexLabel>& vertices,
                               std::vector<LabelPair>& arcs) {
  auto orig = [&](FieldElement c) {
    return side == CirculantSide::Line ? line(index, c) : point(index, c);
  };
  auto copy = [&](FieldElement c) {
    return side == CirculantSide::Line ? line_copy(index, c)
                                       : point_copy(index, c);
  };
  for (auto c : field_elements(q)) {
    vertices.push_back(orig(c));
    vertices.push_back(copy(c));
    for (auto j : jumps.to_copy)
      arcs.emplace_back(orig(c), copy(fe_add(c, {j, q})));
    for (auto j : jumps.to_orig)
      arcs.emplace_back(copy(c), orig(fe_add(c, {j, q})));
  }
}

}  // namespace detail

/// Bipartite circulant joining [m,*] to [m',*'] (or (x,*) to (x',*')).
inline MixedGraph gen_bipartite_circulant(std::uint32_t q, CirculantSide side,
                                          std::uint32_t index,
                                          const JumpSets& jumps) {
  detail::check_bicirculant(q, jumps);
  if (index >= q)
    throw GeneratorError("index " + std::to_string(index) + " not in Z_" +
                         std::to_string(q));
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> arcs;
  detail::append_bicirculant(q, side, {index, q}, jumps, vertices, arcs);
  return build_graph(std::move(vertices), {}, std::move(arcs));
}

inline MixedGraph gen_bipartite_circulant(std::uint32_t q, CirculantSide side,
                                          std::uint32_t index) {
  return gen_bipartite_circulant(q, side, index,
                                 family_params(q).default_jumps());
}

/// G_{p,q}: B_q, its copy, and a bipartite circulant on every line class
/// and every point class. Jump sets default to the parity-dependent ones.
inline MixedGraph gen_family(std::uint32_t q,
                             const std::optional<JumpSets>& override_jumps =
                                 std::nullopt) {
  const FamilyParams fp = family_params(q);
  const JumpSets jumps = override_jumps ? *override_jumps : fp.default_jumps();
  detail::check_bicirculant(q, jumps);

  const auto field = field_elements(q);
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> edges, arcs;
  for (auto m : field)
    for (auto b : field)
      for (auto x : field) {
        auto y = fe_add(fe_mul(m, x), b);
        edges.emplace_back(line(m, b), point(x, y));
        edges.emplace_back(line_copy(m, b), point_copy(x, y));
      }
  for (auto i : field) {
    detail::append_bicirculant(q, CirculantSide::Line, i, jumps, vertices,
                               arcs);
    detail::append_bicirculant(q, CirculantSide::Point, i, jumps, vertices,
                               arcs);
  }
  return build_graph(std::move(vertices), std::move(edges), std::move(arcs));
}

// ---------------------------------------------------------------------------
// [1,3;6] cage by surgery on G_(2,4).

struct SurgeryStep {
  enum class Kind { EraseVertex, DirectEdge, AddArc, RemoveEdge, AddEdge };
  Kind kind;
  VertexLabel first;
  std::optional<VertexLabel> second;
  int stage;  // 1..9, for diagnostics
};

/// The step list applied to gen_projective_incidence(4).
inline std::vector<SurgeryStep> cage_136_surgery() {
  using K = SurgeryStep::Kind;
  const FieldElement o{0, 4}, i{1, 4}, a{2, 4}, a2{3, 4};
  auto erase = [](VertexLabel v, int s) {
    return SurgeryStep{K::EraseVertex, std::move(v), std::nullopt, s};
  };
  auto step = [](K k, VertexLabel u, VertexLabel v, int s) {
    return SurgeryStep{k, std::move(u), std::move(v), s};
  };

  return {
      // 1. erase six lines and six points
      erase(line(o, o), 1), erase(line(o, i), 1), erase(line(i, o), 1),
      erase(line(i, i), 1), erase(line(a, a), 1), erase(line(a, a2), 1),
      erase(point(i, o), 1), erase(point(i, i), 1), erase(point(a, o), 1),
      erase(point(a, i), 1), erase(point(a2, a), 1), erase(point(a2, a2), 1),
      // 2. a directed path through the infinity elements
      step(K::DirectEdge, line(a2, a), class_point(a2), 2),
      step(K::DirectEdge, class_point(a2), inf_line(), 2),
      step(K::DirectEdge, inf_line(), inf_point(), 2),
      step(K::DirectEdge, inf_point(), class_line(o), 2),
      step(K::DirectEdge, class_line(o), point(o, a2), 2),
      // 3.
      step(K::AddArc, class_point(o), class_line(a2), 3),
      step(K::AddArc, class_point(i), class_line(a), 3),
      step(K::AddArc, class_point(a), class_line(i), 3),
      step(K::DirectEdge, line(a, o), point(i, a), 3),
      step(K::DirectEdge, line(a, i), point(i, a2), 3),
      // 4.
      step(K::AddArc, class_line(i), point(o, a), 4),
      step(K::DirectEdge, point(i, a), line(o, a), 4),
      step(K::DirectEdge, point(i, a2), line(i, a), 4),
      step(K::AddArc, class_line(a), point(o, i), 4),
      step(K::DirectEdge, point(a, a), line(a, i), 4),
      step(K::AddArc, class_line(a2), point(o, o), 4),
      step(K::DirectEdge, point(a2, i), line(a, o), 4),
      // 5.
      step(K::AddArc, line(a2, o), class_point(i), 5),
      step(K::AddArc, line(a2, i), class_point(o), 5),
      step(K::AddArc, line(a2, a2), class_point(a), 5),
      // 6.
      step(K::AddArc, line(o, a), point(a2, o), 6),
      step(K::DirectEdge, point(o, a), line(a2, a), 6),
      step(K::RemoveEdge, point(a2, o), line(i, a2), 6),
      step(K::AddArc, line(o, a2), point(a2, i), 6),
      step(K::DirectEdge, point(o, a2), line(a2, a2), 6),
      step(K::RemoveEdge, point(a, a2), line(o, a2), 6),
      // 7.
      step(K::AddArc, line(i, a), point(a, a2), 7),
      step(K::AddArc, line(i, a2), point(a, a), 7),
      // 8. match lines missing an out-arc with points missing an in-arc
      step(K::AddArc, point(o, i), line(o, a2), 8),
      step(K::AddArc, point(o, o), line(i, a2), 8),
      step(K::AddArc, point(a2, o), line(a2, o), 8),
      step(K::AddArc, point(a, a2), line(a2, i), 8),
      // 9.
      step(K::AddEdge, line(a2, a), point(o, a2), 9),
  };
}

/// Applies steps in order. A step whose operands are missing (or that would
/// break simplicity) throws std::logic_error naming the step.
inline MixedGraph apply_surgery(MixedGraph g,
                                const std::vector<SurgeryStep>& steps) {
  using K = SurgeryStep::Kind;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    try {
      if (s.kind != K::EraseVertex && !s.second)
        throw GraphError("missing second operand");
      switch (s.kind) {
        case K::EraseVertex:
          g = delete_vertices(g, {s.first});
          break;
        case K::DirectEdge:
          g = orient_edge(g, s.first, *s.second);
          break;
        case K::AddArc:
          if (!g.contains(s.first) || !g.contains(*s.second))
            throw GraphError("operand not in graph");
          g = add_arc(g, s.first, *s.second);
          break;
        case K::RemoveEdge:
          g = remove_edge(g, s.first, *s.second);
          break;
        case K::AddEdge:
          if (!g.contains(s.first) || !g.contains(*s.second))
            throw GraphError("operand not in graph");
          g = add_edge(g, s.first, *s.second);
          break;
      }
    } catch (const GraphError& e) {
      throw std::logic_error("surgery step " + std::to_string(k) +
                             " (stage " + std::to_string(s.stage) +
                             "): " + e.what());
    }
  }
  return g;
}

/// The 30-vertex [1,3;6]-mixed cage.
inline MixedGraph gen_cage_136() {
  return apply_surgery(gen_projective_incidence(4), cage_136_surgery());
}

// ---------------------------------------------------------------------------
// Mixed Moore tree and lower-bound witness.

namespace detail {

// Undirected Moore tree of the given depth hanging from the path vertex at
// `position`: the root gets `r` children, every deeper node `r - 1`.
inline void append_moore_subtree(std::uint32_t position, std::uint32_t depth,
                                 std::uint32_t r,
                                 std::vector<VertexLabel>& vertices,
                                 std::vector<LabelPair>& edges) {
  struct Frame {
    std::vector<std::uint32_t> path;
    std::uint32_t level;
  };
  std::vector<Frame> stack{{{position}, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.level == depth) continue;
    const VertexLabel parent = f.level == 0 ? plain(position) : tree_node(f.path);
    const std::uint32_t branching = f.level == 0 ? r : r - 1;
    for (std::uint32_t c = 0; c < branching; ++c) {
      auto child = f.path;
      child.push_back(c);
      vertices.push_back(tree_node(child));
      edges.emplace_back(parent, tree_node(child));
      stack.push_back({std::move(child), f.level + 1});
    }
  }
}

}  // namespace detail

/// Directed path n0 -> ... -> n{g-1} with Moore trees of depth i hung at
/// n{i} and n{g-1-i} for i = 1..floor((g-1)/2). For odd g the two middle
/// attachments coincide and a single tree is built there.
inline MixedGraph gen_moore_tree(std::uint32_t r, std::uint32_t g) {
  if (r < 1) throw GeneratorError("Moore tree needs r >= 1");
  if (g < 3) throw GeneratorError("Moore tree needs g >= 3");
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> edges, arcs;
  for (std::uint32_t k = 0; k < g; ++k) vertices.push_back(plain(k));
  for (std::uint32_t k = 0; k + 1 < g; ++k)
    arcs.emplace_back(plain(k), plain(k + 1));
  for (std::uint32_t depth = 1; depth <= (g - 1) / 2; ++depth) {
    std::set<std::uint32_t> positions{depth, g - 1 - depth};
    for (auto pos : positions)
      detail::append_moore_subtree(pos, depth, r, vertices, edges);
  }
  return build_graph(std::move(vertices), std::move(edges), std::move(arcs));
}

/// Circulant C_{z(g-1)+1}(1..z) with the Moore tree T_{r,g} laid on the
/// vertices n0..n{g-1}; the tree's path arcs are the circulant's jump-1 arcs.
inline MixedGraph gen_lower_bound_witness(std::uint32_t z, std::uint32_t r,
                                          std::uint32_t g) {
  if (z < 1) throw GeneratorError("witness needs z >= 1");
  if (r < 1 || g < 3) throw GeneratorError("witness needs r >= 1, g >= 3");
  std::vector<std::uint64_t> jumps;
  for (std::uint64_t j = 1; j <= z; ++j) jumps.push_back(j);
  const std::uint64_t n = static_cast<std::uint64_t>(z) * (g - 1) + 1;
  return graph_union(gen_circulant(n, jumps), gen_moore_tree(r, g));
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_GENERATORS_HPP
