#ifndef MIXEDCAGE_ANALYSIS_HPP
#define MIXEDCAGE_ANALYSIS_HPP

// Exact structural checks on mixed graphs: girth with a witness cycle,
// brute-force cycle enumeration, [z,r]-regularity, strong connectivity and
// diameter.
//
// A mixed path may traverse an edge in either direction and an arc only
// forward. A cycle is a closed mixed path with distinct vertices that uses
// no element twice; two antiparallel arcs form a cycle of length 2.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixedcage/mixed_graph.hpp"

namespace mixedcage {

struct GirthReport {
  std::optional<std::size_t> girth;  // nullopt: acyclic
  std::vector<VertexLabel> witness;  // empty iff acyclic

  bool acyclic() const { return !girth.has_value(); }
};

namespace detail {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Breadth-first search scratch space reused across many searches.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(std::size_t n)
      : dist_(n, kUnreached), parent_(n, kUnreached) {
    queue_.reserve(n);
  }

  /// Shortest mixed path source ~> target of length at most `limit`,
  /// optionally refusing the single step source -> target. Returns the
  /// vertex sequence, or empty if none.
  std::vector<VertexId> shortest_path(const MixedGraph& g, VertexId source,
                                      VertexId target, std::size_t limit,
                                      bool skip_direct_step) {
    reset();
    dist_[source] = 0;
    touched_.push_back(source);
    queue_.push_back(source);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId v = queue_[head];
      if (dist_[v] >= limit) break;
      for (const Adjacency& step : g.successors(v)) {
        const VertexId w = step.to;
        if (dist_[w] != kUnreached) continue;
        if (skip_direct_step && v == source && w == target) continue;
        dist_[w] = dist_[v] + 1;
        parent_[w] = v;
        touched_.push_back(w);
        if (w == target) return unwind(source, target);
        queue_.push_back(w);
      }
    }
    return {};
  }

 private:
  void reset() {
    for (VertexId v : touched_) dist_[v] = parent_[v] = kUnreached;
    touched_.clear();
    queue_.clear();
  }

  std::vector<VertexId> unwind(VertexId source, VertexId target) const {
    std::vector<VertexId> path{target};
    while (path.back() != source) path.push_back(parent_[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> touched_;
};

}  // namespace detail

/// Exact girth. For every element u -> v (an arc, or an edge taken in either
/// direction) finds the shortest mixed path v ~> u not reusing that element;
/// the girth is one more than the shortest such path. Elements are visited
/// in canonical order and the first minimum wins, so the witness is
/// deterministic.
inline GirthReport girth(const MixedGraph& g) {
  GirthReport report;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<VertexId> best_cycle;
  detail::BfsWorkspace bfs(g.order());

  for (VertexId u = 0; u < g.order() && best > 2; ++u) {
    for (const Adjacency& step : g.successors(u)) {
      if (best <= 2) break;
      // A cycle shorter than `best` needs a return path of length <= best-2.
      const std::size_t limit =
          best == std::numeric_limits<std::size_t>::max() ? g.order() : best - 2;
      if (limit == 0) break;
      auto back = bfs.shortest_path(g, step.to, u, limit, !step.via_arc);
      if (back.empty()) continue;
      // back = v ... u ; the cycle is u, v, ..., (predecessor of u).
      std::vector<VertexId> cycle{u};
      cycle.insert(cycle.end(), back.begin(), back.end() - 1);
      if (cycle.size() < best) {
        best = cycle.size();
        best_cycle = std::move(cycle);
      }
    }
  }
  if (!best_cycle.empty()) {
    report.girth = best;
    for (VertexId v : best_cycle) report.witness.push_back(g.label(v));
  }
  return report;
}

/// True iff `cycle` (vertices listed in traversal order, closing back to the
/// first) is a mixed cycle of G.
inline bool is_mixed_cycle(const MixedGraph& g,
                           std::span<const VertexLabel> cycle) {
  if (cycle.size() < 2) return false;
  std::vector<VertexId> ids;
  for (const auto& l : cycle) {
    auto id = g.find(l);
    if (!id) return false;
    ids.push_back(*id);
  }
  auto sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  if (ids.size() == 2)  // only two antiparallel arcs close without reuse
    return g.has_arc(ids[0], ids[1]) && g.has_arc(ids[1], ids[0]);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    VertexId a = ids[k], b = ids[(k + 1) % ids.size()];
    if (!g.has_edge(a, b) && !g.has_arc(a, b)) return false;
  }
  return true;
}

/// Every mixed cycle of length <= max_length, each listed once: rotated to
/// start at its smallest vertex, and for edge-only cycles oriented so the
/// second vertex is smaller than the last. Output is sorted.
/// Exponential in max_length; meant as an oracle on small graphs.
inline std::vector<std::vector<VertexLabel>> enumerate_cycles_upto(
    const MixedGraph& g, std::size_t max_length) {
  std::vector<std::vector<VertexId>> found;
  std::vector<VertexId> path;
  std::vector<bool> on_path(g.order(), false);
  // Per depth: whether the step into path[k] was an arc.
  std::vector<bool> step_arc;

  struct Search {
    const MixedGraph& g;
    std::size_t max_length;
    std::vector<std::vector<VertexId>>& found;
    std::vector<VertexId>& path;
    std::vector<bool>& on_path;
    std::vector<bool>& step_arc;

    void extend(VertexId start, std::size_t arcs_used) {
      const VertexId v = path.back();
      for (const Adjacency& step : g.successors(v)) {
        const VertexId w = step.to;
        const std::size_t arcs = arcs_used + (step.via_arc ? 1 : 0);
        if (w == start) {
          if (path.size() < 2) continue;
          if (path.size() == 2 && !(step.via_arc && step_arc[1])) continue;
          if (arcs == 0 && path[1] > path.back()) continue;
          found.push_back(path);
          continue;
        }
        if (w < start || on_path[w] || path.size() >= max_length) continue;
        on_path[w] = true;
        path.push_back(w);
        step_arc.push_back(step.via_arc);
        extend(start, arcs);
        step_arc.pop_back();
        path.pop_back();
        on_path[w] = false;
      }
    }
  } search{g, max_length, found, path, on_path, step_arc};

  if (max_length >= 2) {
    for (VertexId s = 0; s < g.order(); ++s) {
      path.assign(1, s);
      step_arc.assign(1, false);
      on_path[s] = true;
      search.extend(s, 0);
      on_path[s] = false;
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<VertexLabel>> out;
  out.reserve(found.size());
  for (const auto& c : found) {
    std::vector<VertexLabel> labels;
    for (VertexId v : c) labels.push_back(g.label(v));
    out.push_back(std::move(labels));
  }
  return out;
}

struct Regularity {
  std::size_t z = 0;  // in- and out-arcs per vertex
  std::size_t r = 0;  // edges per vertex
  friend bool operator==(const Regularity&, const Regularity&) = default;
};

/// (z, r) when every vertex has z in-arcs, z out-arcs and r edges.
inline std::optional<Regularity> regularity(const MixedGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const DegreeProfile profile(g);
  const DegreeTriple first = profile[0];
  if (first.in_arcs != first.out_arcs) return std::nullopt;
  for (VertexId v = 1; v < profile.size(); ++v)
    if (!(profile[v] == first)) return std::nullopt;
  return Regularity{first.in_arcs, first.edge_degree};
}

struct VerificationReport {
  bool passed = false;
  std::size_t order = 0;
  std::optional<Regularity> regularity;
  GirthReport girth;
  /// First vertex (canonical order) whose degrees differ from (z, z, r).
  std::optional<VertexLabel> offending_vertex;
  std::optional<DegreeTriple> offending_degrees;
};

/// Passes iff G is [z,r]-regular and its girth is exactly g.
inline VerificationReport verify_zrg(const MixedGraph& g, std::size_t z,
                                     std::size_t r, std::size_t girth_target) {
  VerificationReport rep;
  rep.order = g.order();
  rep.regularity = regularity(g);
  const DegreeProfile profile(g);
  const DegreeTriple expected{z, z, r};
  for (VertexId v = 0; v < profile.size(); ++v) {
    if (!(profile[v] == expected)) {
      rep.offending_vertex = g.label(v);
      rep.offending_degrees = profile[v];
      break;
    }
  }
  rep.girth = girth(g);
  rep.passed = !rep.offending_vertex && g.order() > 0 &&
               rep.girth.girth == std::optional<std::size_t>(girth_target);
  return rep;
}

namespace detail {

inline std::size_t count_reachable(const MixedGraph& g, VertexId source,
                                   bool forward) {
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack{source};
  seen[source] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Adjacency& s : forward ? g.successors(v) : g.predecessors(v)) {
      if (seen[s.to]) continue;
      seen[s.to] = true;
      ++count;
      stack.push_back(s.to);
    }
  }
  return count;
}

}  // namespace detail

/// Every ordered pair of vertices is joined by a mixed path.
inline bool is_strongly_connected(const MixedGraph& g) {
  if (g.order() <= 1) return true;
  return detail::count_reachable(g, 0, true) == g.order() &&
         detail::count_reachable(g, 0, false) == g.order();
}

struct Diameter {
  std::optional<std::size_t> value;  // nullopt: infinite
  bool infinite() const { return !value.has_value(); }
};

/// Maximum over ordered pairs of the shortest mixed-path length.
inline Diameter diameter(const MixedGraph& g) {
  std::size_t best = 0;
  std::vector<std::uint32_t> dist(g.order());
  std::vector<VertexId> queue;
  queue.reserve(g.order());
  for (VertexId s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), detail::kUnreached);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (const Adjacency& step : g.successors(v)) {
        if (dist[step.to] != detail::kUnreached) continue;
        dist[step.to] = dist[v] + 1;
        queue.push_back(step.to);
      }
    }
    if (queue.size() != g.order()) return {};
    best = std::max<std::size_t>(best, dist[queue.back()]);
  }
  return {best};
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_ANALYSIS_HPP
