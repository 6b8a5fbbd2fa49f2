#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "mixedcage/generators.hpp"
#include "mixedcage/mixed_graph.hpp"
#include "support.hpp"

using namespace mixedcage;

namespace {

const VertexLabel a = plain(0), b = plain(1), c = plain(2);

MixedGraph triangle() {
  return build_graph({c, a, b}, {{a, b}, {b, c}, {a, c}}, {});
}

void check_degree_sums(const MixedGraph& g) {
  const auto profile = degree_profile(g);
  std::size_t in = 0, out = 0, edge = 0;
  for (const auto& t : profile.triples()) {
    in += t.in_arcs;
    out += t.out_arcs;
    edge += t.edge_degree;
  }
  CHECK(in == g.arc_count());
  CHECK(out == g.arc_count());
  CHECK(edge == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("build_graph canonicalizes") {
  const auto g = triangle();
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.arc_count() == 0);
  CHECK(g.vertices()[0] == a);
  CHECK(g == build_graph({a, b, c}, {{c, a}, {b, a}, {c, b}}, {}));
  CHECK_FALSE(g.field_order());
}

TEST_CASE("build_graph rejects invalid input") {
  SECTION("edge parallel to an arc, either direction") {
    CHECK_THROWS_AS(build_graph({a, b}, {{a, b}}, {{a, b}}), GraphError);
    CHECK_THROWS_AS(build_graph({a, b}, {{a, b}}, {{b, a}}), GraphError);
  }
  SECTION("self-loops") {
    CHECK_THROWS_AS(build_graph({a}, {}, {{a, a}}), GraphError);
    CHECK_THROWS_AS(build_graph({a}, {{a, a}}, {}), GraphError);
  }
  SECTION("duplicates") {
    CHECK_THROWS_AS(build_graph({a, b}, {{a, b}, {b, a}}, {}), GraphError);
    CHECK_THROWS_AS(build_graph({a, b}, {}, {{a, b}, {a, b}}), GraphError);
    CHECK_THROWS_AS(build_graph({a, a}, {}, {}), GraphError);
  }
  SECTION("unknown endpoint") {
    CHECK_THROWS_AS(build_graph({a}, {{a, b}}, {}), GraphError);
    CHECK_THROWS_AS(build_graph({a}, {}, {{b, a}}), GraphError);
  }
  SECTION("mixed field orders") {
    CHECK_THROWS_AS(build_graph({point({0, 3}, {0, 3}), line({0, 5}, {0, 5})},
                                {}, {}),
                    GraphError);
  }
}

TEST_CASE("antiparallel arcs are allowed") {
  const auto g = build_graph({a, b}, {}, {{a, b}, {b, a}});
  CHECK(g.arc_count() == 2);
}

TEST_CASE("orient_edge") {
  SECTION("triangle") {
    const auto g = orient_edge(triangle(), a, b);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_arc(a, b));
    CHECK_FALSE(g.has_edge(a, b));
    CHECK_THROWS_AS(orient_edge(g, a, b), GraphError);
  }
  SECTION("path a-b oriented b->a") {
    const auto g = orient_edge(build_graph({a, b}, {{a, b}}, {}), b, a);
    CHECK(g.arc_count() == 1);
    CHECK(g.edge_count() == 0);
    const auto profile = degree_profile(g);
    CHECK(profile.at(a) == DegreeTriple{1, 0, 0});
    CHECK(profile.at(b) == DegreeTriple{0, 1, 0});
  }
  SECTION("preserves |V| and |E|+|A|") {
    const auto pg = gen_projective_incidence(3);
    const auto [u, v] = pg.edge_labels().front();
    const auto g = orient_edge(pg, v, u);
    CHECK(g.order() == pg.order());
    CHECK(g.edge_count() + g.arc_count() == pg.edge_count());
  }
}

TEST_CASE("degree_profile") {
  SECTION("empty graph") {
    const auto g = build_graph({a, b, c}, {}, {});
    for (const auto& t : degree_profile(g).triples())
      CHECK(t == DegreeTriple{0, 0, 0});
  }
  SECTION("directed 3-cycle") {
    const auto g = build_graph({a, b, c}, {}, {{a, b}, {b, c}, {c, a}});
    for (const auto& t : degree_profile(g).triples())
      CHECK(t == DegreeTriple{1, 1, 0});
  }
  SECTION("G_(2,4) is 5-regular") {
    const auto g = gen_projective_incidence(4);
    for (const auto& t : degree_profile(g).triples())
      CHECK(t == DegreeTriple{0, 0, 5});
  }
  SECTION("unknown label") {
    CHECK_THROWS_AS(degree_profile(triangle()).at(plain(9)), GraphError);
  }
}

TEST_CASE("delete_vertices") {
  const auto g = triangle();
  CHECK(delete_vertices(g, {a, b, c}).order() == 0);
  CHECK(delete_vertices(g, std::vector<VertexLabel>{}) == g);
  const auto h = delete_vertices(g, {a});
  CHECK(h.order() == 2);
  CHECK(h.edge_count() == 1);
  CHECK_THROWS_AS(delete_vertices(g, {plain(7)}), GraphError);

  const auto extra = projective_extra_vertices(4);
  const auto affine = delete_vertices(gen_projective_incidence(4), extra);
  CHECK(affine.order() == 32);
  for (const auto& t : degree_profile(affine).triples())
    CHECK(t == DegreeTriple{0, 0, 4});
}

TEST_CASE("graph_union identifies shared elements") {
  const auto left = build_graph({a, b}, {}, {{a, b}});
  const auto right = build_graph({b, c, a}, {{b, c}}, {{a, b}});
  const auto u = graph_union(left, right);
  CHECK(u.order() == 3);
  CHECK(u.arc_count() == 1);
  CHECK(u.edge_count() == 1);
  const auto clash = build_graph({a, b}, {{a, b}}, {});
  CHECK_THROWS_AS(graph_union(left, clash), GraphError);
}

TEST_CASE("degree sums on random graphs") {
  std::mt19937_64 rng(testing::kCorpusSeed + 1);
  for (int k = 0; k < 20; ++k)
    check_degree_sums(testing::random_mixed_graph(rng, 15, 0.15, 0.15, 0.02));
}

TEST_CASE("successor lists follow the traversal rules") {
  const auto g = build_graph({a, b, c}, {{a, b}}, {{b, c}});
  const auto ia = *g.find(a), ib = *g.find(b), ic = *g.find(c);
  CHECK(g.successors(ia).size() == 1);
  CHECK(g.successors(ib).size() == 2);  // back along the edge, along the arc
  CHECK(g.successors(ic).empty());
  CHECK(g.predecessors(ic).size() == 1);
  CHECK(g.predecessors(ic)[0].to == ib);
  CHECK(g.predecessors(ic)[0].via_arc);
}
