#ifndef MIXEDCAGE_TESTS_SUPPORT_HPP
#define MIXEDCAGE_TESTS_SUPPORT_HPP

// Test-only helpers: seeded random mixed graphs, independent oracles, and
// the explicit 6-cycles of the girth-6 family.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mixedcage/analysis.hpp"
#include "mixedcage/generators.hpp"
#include "mixedcage/mixed_graph.hpp"

namespace mixedcage::testing {

/// Seed of the random-graph corpus.
inline constexpr std::uint64_t kCorpusSeed = 0x6d69786564636167ULL;

/// Random simple mixed graph on `n` plain vertices. Each unordered pair gets
/// an edge, an arc, two antiparallel arcs, or nothing.
inline MixedGraph random_mixed_graph(std::mt19937_64& rng, std::size_t n,
                                     double edge_p, double arc_p,
                                     double digon_p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<VertexLabel> vertices;
  std::vector<LabelPair> edges, arcs;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(plain(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double t = coin(rng);
      if (t < edge_p) {
        edges.emplace_back(plain(i), plain(j));
      } else if (t < edge_p + arc_p) {
        if (coin(rng) < 0.5)
          arcs.emplace_back(plain(i), plain(j));
        else
          arcs.emplace_back(plain(j), plain(i));
      } else if (t < edge_p + arc_p + digon_p) {
        arcs.emplace_back(plain(i), plain(j));
        arcs.emplace_back(plain(j), plain(i));
      }
    }
  return build_graph(std::move(vertices), std::move(edges), std::move(arcs));
}

/// The fixed corpus of 50 random graphs (<= 30 vertices) used by the
/// girth oracle checks.
inline std::vector<MixedGraph> random_corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<MixedGraph> out;
  std::uniform_int_distribution<std::size_t> size(4, 30);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = size(rng);
    // Sparse enough that girth varies; every tenth graph may hold digons.
    const double density = 2.5 / static_cast<double>(n);
    out.push_back(random_mixed_graph(rng, n, density * 0.6, density * 0.6,
                                     k % 10 == 0 ? 0.01 : 0.0));
  }
  return out;
}

/// Girth by brute force: the length of the shortest enumerated cycle.
inline std::optional<std::size_t> brute_force_girth(const MixedGraph& g) {
  for (std::size_t len = 2; len <= g.order(); ++len)
    if (!enumerate_cycles_upto(g, len).empty()) return len;
  return std::nullopt;
}

/// Order of T_{r,g} counted directly: the g path vertices plus, for each
/// attachment position, the nodes of a Moore tree of the given depth
/// (r at the first level, times r-1 per further level).
inline std::uint64_t moore_tree_count(std::uint64_t r, std::uint64_t g) {
  std::uint64_t total = g;
  for (std::uint64_t depth = 1; depth <= (g - 1) / 2; ++depth) {
    std::set<std::uint64_t> positions{depth, g - 1 - depth};
    for (std::size_t k = 0; k < positions.size(); ++k) {
      std::uint64_t level = r;
      for (std::uint64_t l = 1; l <= depth; ++l) {
        total += level;
        level *= r - 1;
      }
    }
  }
  return total;
}

inline std::vector<std::uint32_t> range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> v;
  for (auto k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

/// The 6-cycle exactly as displayed for G_{p,q}:
/// ((x1,y1), (x1',(y1+j)'), [m',b'], (x2',(y2+j-1)'), (x2,y2), [m,b])
/// with yi = m*xi + b.
inline std::vector<VertexLabel> displayed_six_cycle(std::uint32_t q,
                                                    std::uint32_t m,
                                                    std::uint32_t b,
                                                    std::uint32_t x1,
                                                    std::uint32_t x2,
                                                    std::uint32_t j) {
  const FieldElement M{m, q}, B{b, q}, X1{x1, q}, X2{x2, q}, J{j, q};
  const FieldElement one{1, q};
  const auto y1 = fe_add(fe_mul(M, X1), B);
  const auto y2 = fe_add(fe_mul(M, X2), B);
  return {point(X1, y1),
          point_copy(X1, fe_add(y1, J)),
          line_copy(M, B),
          point_copy(X2, fe_sub(fe_add(y2, J), one)),
          point(X2, y2),
          line(M, B)};
}

/// A 6-cycle of G_{p,q} through the original line [m,b]:
/// (x1,y1) -> (x1',(y1+s)') -- [M',c'] -- (x2',(y2-t)') -> (x2,y2) -- [m,b]
/// with s a to-copy jump, t a to-original jump, and [M',c'] the copy line
/// through the two copy points.
inline std::vector<VertexLabel> family_six_cycle(std::uint32_t q,
                                                 std::uint32_t m,
                                                 std::uint32_t b,
                                                 std::uint32_t x1,
                                                 std::uint32_t x2,
                                                 std::uint32_t s,
                                                 std::uint32_t t) {
  const FieldElement M{m, q}, B{b, q}, X1{x1, q}, X2{x2, q};
  const auto y1 = fe_add(fe_mul(M, X1), B);
  const auto y2 = fe_add(fe_mul(M, X2), B);
  const auto c1 = fe_add(y1, {s, q});
  const auto c2 = fe_sub(y2, {t, q});
  const auto slope = fe_mul(fe_sub(c2, c1), fe_inv(fe_sub(X2, X1)));
  const auto intercept = fe_sub(c1, fe_mul(slope, X1));
  return {point(X1, y1),       point_copy(X1, c1),
          line_copy(slope, intercept), point_copy(X2, c2),
          point(X2, y2),       line(M, B)};
}

}  // namespace mixedcage::testing

#endif  // MIXEDCAGE_TESTS_SUPPORT_HPP
