#ifndef MIXEDCAGE_MIXED_GRAPH_HPP
#define MIXEDCAGE_MIXED_GRAPH_HPP

// Immutable simple mixed graph: undirected edges plus directed arcs.
//
// Invariants enforced on construction:
//   * no self-loops, no duplicate edges, no duplicate arcs;
//   * an edge {u,v} excludes the arcs (u,v) and (v,u);
//   * every endpoint is a vertex;
//   * all field-valued labels share one field order.
// Antiparallel arcs (u,v), (v,u) are allowed; analyses see them as a 2-cycle.
//
// Vertices are stored in canonical label order and referred to internally by
// their position in that order (VertexId).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mixedcage/vertex_label.hpp"

namespace mixedcage {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexId = std::uint32_t;
using LabelPair = std::pair<VertexLabel, VertexLabel>;
using IdPair = std::pair<VertexId, VertexId>;

/// One step of mixed traversal out of (or into) a vertex.
struct Adjacency {
  VertexId to;
  bool via_arc;
};

struct DegreeTriple {
  std::size_t in_arcs = 0;
  std::size_t out_arcs = 0;
  std::size_t edge_degree = 0;
  friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

class MixedGraph;
MixedGraph build_graph(std::vector<VertexLabel> vertices,
                       std::vector<LabelPair> edges,
                       std::vector<LabelPair> arcs);

class MixedGraph {
 public:
  MixedGraph() = default;

  std::optional<std::uint32_t> field_order() const { return field_order_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  std::span<const VertexLabel> vertices() const { return vertices_; }
  const VertexLabel& label(VertexId v) const { return vertices_.at(v); }

  /// Edges as (i,j) with i < j, sorted.
  std::span<const IdPair> edges() const { return edges_; }
  /// Arcs as (tail, head), sorted.
  std::span<const IdPair> arcs() const { return arcs_; }

  /// Mixed successors: edge neighbours and arc heads, sorted by id.
  std::span<const Adjacency> successors(VertexId v) const { return out_[v]; }
  /// Mixed predecessors: edge neighbours and arc tails, sorted by id.
  std::span<const Adjacency> predecessors(VertexId v) const { return in_[v]; }

  std::optional<VertexId> find(const VertexLabel& label) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
  }
  bool contains(const VertexLabel& label) const {
    return find(label).has_value();
  }

  bool has_edge(VertexId u, VertexId v) const {
    IdPair key = std::minmax(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), key);
  }
  bool has_arc(VertexId tail, VertexId head) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), IdPair{tail, head});
  }
  bool has_edge(const VertexLabel& u, const VertexLabel& v) const {
    auto a = find(u), b = find(v);
    return a && b && has_edge(*a, *b);
  }
  bool has_arc(const VertexLabel& tail, const VertexLabel& head) const {
    auto a = find(tail), b = find(head);
    return a && b && has_arc(*a, *b);
  }

  std::vector<LabelPair> edge_labels() const { return to_labels(edges_); }
  std::vector<LabelPair> arc_labels() const { return to_labels(arcs_); }

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.field_order_ == b.field_order_ && a.vertices_ == b.vertices_ &&
           a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

 private:
  friend MixedGraph build_graph(std::vector<VertexLabel>,
                                std::vector<LabelPair>,
                                std::vector<LabelPair>);

  std::vector<LabelPair> to_labels(const std::vector<IdPair>& pairs) const {
    std::vector<LabelPair> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.emplace_back(vertices_[a], vertices_[b]);
    return out;
  }

  std::optional<std::uint32_t> field_order_;
  std::vector<VertexLabel> vertices_;
  std::vector<IdPair> edges_;
  std::vector<IdPair> arcs_;
  std::vector<std::vector<Adjacency>> out_;
  std::vector<std::vector<Adjacency>> in_;
};

/// Validating constructor; input order is irrelevant.
inline MixedGraph build_graph(std::vector<VertexLabel> vertices,
                              std::vector<LabelPair> edges,
                              std::vector<LabelPair> arcs) {
  MixedGraph g;
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end());
      dup != vertices.end())
    throw GraphError("duplicate vertex " + to_string(*dup));

  for (const auto& v : vertices) {
    auto q = v.field_order();
    if (!q) continue;
    if (g.field_order_ && *g.field_order_ != *q)
      throw GraphError("mixed field orders: " + std::to_string(*g.field_order_) +
                       " and " + std::to_string(*q) + " (vertex " +
                       to_string(v) + ")");
    g.field_order_ = q;
  }
  g.vertices_ = std::move(vertices);

  auto id_of = [&](const VertexLabel& l, const char* what) {
    auto id = g.find(l);
    if (!id)
      throw GraphError(std::string(what) + " endpoint " + to_string(l) +
                       " is not a vertex");
    return *id;
  };

  g.edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    VertexId a = id_of(u, "edge"), b = id_of(v, "edge");
    if (a == b) throw GraphError("self-loop edge at " + to_string(u));
    g.edges_.push_back(std::minmax(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
      dup != g.edges_.end())
    throw GraphError("duplicate edge " + to_string(g.vertices_[dup->first]) +
                     " -- " + to_string(g.vertices_[dup->second]));

  g.arcs_.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    VertexId a = id_of(u, "arc"), b = id_of(v, "arc");
    if (a == b) throw GraphError("self-loop arc at " + to_string(u));
    g.arcs_.emplace_back(a, b);
  }
  std::sort(g.arcs_.begin(), g.arcs_.end());
  if (auto dup = std::adjacent_find(g.arcs_.begin(), g.arcs_.end());
      dup != g.arcs_.end())
    throw GraphError("duplicate arc " + to_string(g.vertices_[dup->first]) +
                     " -> " + to_string(g.vertices_[dup->second]));

  for (auto [a, b] : g.arcs_) {
    if (g.has_edge(a, b))
      throw GraphError("arc " + to_string(g.vertices_[a]) + " -> " +
                       to_string(g.vertices_[b]) +
                       " is parallel to an edge");
  }

  g.out_.assign(g.vertices_.size(), {});
  g.in_.assign(g.vertices_.size(), {});
  for (auto [a, b] : g.edges_) {
    g.out_[a].push_back({b, false});
    g.out_[b].push_back({a, false});
    g.in_[a].push_back({b, false});
    g.in_[b].push_back({a, false});
  }
  for (auto [a, b] : g.arcs_) {
    g.out_[a].push_back({b, true});
    g.in_[b].push_back({a, true});
  }
  auto by_target = [](const Adjacency& x, const Adjacency& y) {
    return x.to < y.to;
  };
  for (auto& adj : g.out_) std::sort(adj.begin(), adj.end(), by_target);
  for (auto& adj : g.in_) std::sort(adj.begin(), adj.end(), by_target);
  return g;
}

/// Per-vertex degree triples, aligned with G.vertices().
class DegreeProfile {
 public:
  explicit DegreeProfile(const MixedGraph& g)
      : vertices_(g.vertices().begin(), g.vertices().end()),
        degrees_(g.order()) {
    for (auto [a, b] : g.edges()) {
      ++degrees_[a].edge_degree;
      ++degrees_[b].edge_degree;
    }
    for (auto [tail, head] : g.arcs()) {
      ++degrees_[tail].out_arcs;
      ++degrees_[head].in_arcs;
    }
  }

  std::size_t size() const { return degrees_.size(); }
  const DegreeTriple& operator[](VertexId v) const { return degrees_[v]; }
  const DegreeTriple& at(const VertexLabel& label) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label)
      throw GraphError("no vertex " + to_string(label));
    return degrees_[static_cast<std::size_t>(it - vertices_.begin())];
  }
  std::span<const DegreeTriple> triples() const& { return degrees_; }
  // Safe in `for (auto t : degree_profile(g).triples())`.
  std::vector<DegreeTriple> triples() && { return std::move(degrees_); }

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<DegreeTriple> degrees_;
};

inline DegreeProfile degree_profile(const MixedGraph& g) {
  return DegreeProfile(g);
}

namespace detail {

inline std::vector<VertexLabel> vertex_list(const MixedGraph& g) {
  return {g.vertices().begin(), g.vertices().end()};
}

inline VertexId require_vertex(const MixedGraph& g, const VertexLabel& l) {
  auto id = g.find(l);
  if (!id) throw GraphError("no vertex " + to_string(l));
  return *id;
}

}  // namespace detail

/// Replaces edge {u,v} by arc (u,v).
inline MixedGraph orient_edge(const MixedGraph& g, const VertexLabel& u,
                              const VertexLabel& v) {
  if (!g.has_edge(u, v))
    throw GraphError("cannot orient missing edge " + to_string(u) + " -- " +
                     to_string(v));
  auto edges = g.edge_labels();
  std::erase_if(edges, [&](const LabelPair& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
  auto arcs = g.arc_labels();
  arcs.emplace_back(u, v);
  return build_graph(detail::vertex_list(g), std::move(edges), std::move(arcs));
}

inline MixedGraph add_arc(const MixedGraph& g, const VertexLabel& tail,
                          const VertexLabel& head) {
  auto arcs = g.arc_labels();
  arcs.emplace_back(tail, head);
  return build_graph(detail::vertex_list(g), g.edge_labels(), std::move(arcs));
}

inline MixedGraph add_edge(const MixedGraph& g, const VertexLabel& u,
                           const VertexLabel& v) {
  auto edges = g.edge_labels();
  edges.emplace_back(u, v);
  return build_graph(detail::vertex_list(g), std::move(edges), g.arc_labels());
}

inline MixedGraph remove_edge(const MixedGraph& g, const VertexLabel& u,
                              const VertexLabel& v) {
  if (!g.has_edge(u, v))
    throw GraphError("cannot remove missing edge " + to_string(u) + " -- " +
                     to_string(v));
  auto edges = g.edge_labels();
  std::erase_if(edges, [&](const LabelPair& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
  return build_graph(detail::vertex_list(g), std::move(edges), g.arc_labels());
}

/// Induced subgraph on V \ removed.
inline MixedGraph delete_vertices(const MixedGraph& g,
                                  std::span<const VertexLabel> removed) {
  std::vector<bool> drop(g.order(), false);
  for (const auto& l : removed) drop[detail::require_vertex(g, l)] = true;

  std::vector<VertexLabel> vertices;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!drop[v]) vertices.push_back(g.label(v));
  std::vector<LabelPair> edges, arcs;
  for (auto [a, b] : g.edges())
    if (!drop[a] && !drop[b]) edges.emplace_back(g.label(a), g.label(b));
  for (auto [a, b] : g.arcs())
    if (!drop[a] && !drop[b]) arcs.emplace_back(g.label(a), g.label(b));
  return build_graph(std::move(vertices), std::move(edges), std::move(arcs));
}

inline MixedGraph delete_vertices(const MixedGraph& g,
                                  std::initializer_list<VertexLabel> removed) {
  return delete_vertices(g, std::span<const VertexLabel>(removed.begin(),
                                                         removed.size()));
}

/// Set union of vertices, edges and arcs. Elements present in both inputs
/// are identified; the result must still be simple.
inline MixedGraph graph_union(const MixedGraph& a, const MixedGraph& b) {
  std::set<VertexLabel> vertices(a.vertices().begin(), a.vertices().end());
  vertices.insert(b.vertices().begin(), b.vertices().end());

  auto normalized = [](const VertexLabel& x, const VertexLabel& y) {
    return x < y ? LabelPair{x, y} : LabelPair{y, x};
  };
  std::set<LabelPair> edges, arcs;
  for (const auto* g : {&a, &b}) {
    for (const auto& [x, y] : g->edge_labels()) edges.insert(normalized(x, y));
    for (auto& arc : g->arc_labels()) arcs.insert(std::move(arc));
  }
  return build_graph({vertices.begin(), vertices.end()},
                     {edges.begin(), edges.end()}, {arcs.begin(), arcs.end()});
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_MIXED_GRAPH_HPP
