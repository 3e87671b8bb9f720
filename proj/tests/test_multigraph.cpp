#include <doctest.h>

#include <set>

#include "cosmopoly/error.hpp"
#include "cosmopoly/multigraph.hpp"

using namespace cosmopoly;

namespace {

Multigraph two_triangles_at_vertex() { return one_sum(make_cycle(3), 0, make_cycle(3), 0); }

std::vector<BlockKind> kinds(const Multigraph& g) {
  std::vector<BlockKind> out;
  for (const auto& b : blocks(g)) out.push_back(b.kind);
  return out;
}

}  // namespace

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), InvalidGraph);
  CHECK_THROWS_AS(Multigraph(3, {{0, 1}}), InvalidGraph);
  CHECK_THROWS_AS(Multigraph(0, {}), InvalidGraph);
  const Multigraph g(2, {{0, 1}, {1, 1}, {0, 1}});
  CHECK(g.edge_count() == 3);
  CHECK(g.loop_count() == 1);
  CHECK(g.incident(1) == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("connected components") {
  CHECK(connected_components(disjoint_union(make_path(1), make_path(1))).size() == 2);
  CHECK(connected_components(make_cycle(3)).size() == 1);
  CHECK(connected_components(disjoint_union(make_cycle(3), make_loops(1))).size() == 2);
  CHECK_FALSE(is_connected(disjoint_union(make_cycle(3), make_loops(1))));
}

TEST_CASE("block decomposition") {
  const auto tt = blocks(two_triangles_at_vertex());
  REQUIRE(tt.size() == 2);
  for (const auto& b : tt) {
    CHECK(b.kind == BlockKind::Multicycle);
    CHECK(b.multiplicities == std::vector<int>{1, 1, 1});
  }

  // Double edge u-v plus pendant v-w.
  const Multigraph dp(3, {{0, 1}, {0, 1}, {1, 2}});
  const auto db = blocks(dp);
  REQUIRE(db.size() == 2);
  CHECK(db[0].kind == BlockKind::Bundle);
  CHECK(db[0].multiplicities == std::vector<int>{2});
  CHECK(db[1].kind == BlockKind::SingleEdge);

  // Loop at a triangle vertex; the loop is edge 0 so it sorts first.
  const Multigraph lt(3, {{0, 0}, {0, 1}, {1, 2}, {2, 0}});
  CHECK(kinds(lt) == std::vector<BlockKind>{BlockKind::Loop, BlockKind::Multicycle});

  CHECK(kinds(make_theta(1, 2, 2)) == std::vector<BlockKind>{BlockKind::Other});
  CHECK(kinds(make_star(3)) == std::vector<BlockKind>(3, BlockKind::SingleEdge));
}

TEST_CASE("multicycle block records cycle order and multiplicities") {
  const auto b = blocks(make_multicycle({2, 1, 3}));
  REQUIRE(b.size() == 1);
  CHECK(b[0].cycle_order == std::vector<VertexId>{0, 1, 2});
  CHECK(b[0].multiplicities == std::vector<int>{2, 1, 3});
  // Walk leaves vertex 0 along its smallest incident edge.
  const Multigraph g(4, {{0, 3}, {3, 2}, {2, 1}, {1, 0}});
  CHECK(blocks(g)[0].cycle_order == std::vector<VertexId>{0, 3, 2, 1});
}

TEST_CASE("blocks partition the edges") {
  const Multigraph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 3}, {3, 4}, {3, 4}, {4, 5}, {5, 3}, {0, 1}});
  std::multiset<EdgeId> seen;
  for (const auto& b : blocks(g)) seen.insert(b.edges.begin(), b.edges.end());
  CHECK(seen.size() == static_cast<std::size_t>(g.edge_count()));
  CHECK(std::set<EdgeId>(seen.begin(), seen.end()).size() == seen.size());
}

TEST_CASE("connected subgraphs") {
  const auto edge = connected_subgraphs(make_path(1));
  CHECK(edge.size() == 3);
  CHECK(edge == std::vector<Subgraph>{{{0}, {}}, {{0, 1}, {0}}, {{1}, {}}});
  CHECK(connected_subgraphs(make_loops(1)).size() == 2);
  CHECK(connected_subgraphs(make_cycle(3)).size() == 10);
  CHECK(connected_subgraphs(make_bundle(2)).size() == 5);
  CHECK_THROWS_AS(connected_subgraphs(make_cycle(3), 5), BudgetExceeded);
}

TEST_CASE("simple paths") {
  CHECK(simple_paths(make_path(1)).empty());
  const auto p = simple_paths(make_path(2));
  CHECK(p.size() == 2);
  for (const auto& path : p) CHECK(path.edges.size() == 2);
  CHECK(simple_paths(make_cycle(3)).size() == 6);
  // Parallel edges give distinct paths: 2 choices on the double edge, 2 directions.
  CHECK(simple_paths(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}})).size() == 4);
}

TEST_CASE("simple cycles") {
  CHECK(simple_cycles(make_cycle(3)).size() == 1);
  CHECK(simple_cycles(make_bundle(2)).size() == 1);
  CHECK(simple_cycles(make_bundle(3)).size() == 3);
  CHECK(simple_cycles(make_loops(2)).empty());
  CHECK(simple_cycles(make_star(3)).empty());
  // One 2-cycle plus a triangle through either parallel edge.
  CHECK(simple_cycles(make_multicycle({2, 1, 1})).size() == 3);
  for (const auto& c : simple_cycles(make_cycle(4))) {
    CHECK(c.vertices.size() == c.edges.size());
    CHECK(c.vertices.front() == 0);
  }
}

TEST_CASE("named families") {
  CHECK(make_star(3).vertex_count() == 4);
  const auto th = make_theta(2, 2, 2);
  CHECK(th.vertex_count() == 5);
  CHECK(th.edge_count() == 6);
  const auto tt = two_triangles_at_vertex();
  CHECK(tt.vertex_count() == 5);
  CHECK(tt.edge_count() == 6);
  CHECK(disjoint_union(make_cycle(3), make_cycle(3)).vertex_count() == 6);
  CHECK_THROWS_AS(make_multicycle({1, 1}), InvalidGraph);
}

TEST_CASE("edge subgraph relabels vertices") {
  const auto x = edge_subgraph(two_triangles_at_vertex(), {3, 4, 5});
  CHECK(x.graph.vertex_count() == 3);
  CHECK(x.vertex_map == std::vector<VertexId>{0, 3, 4});
  CHECK(x.edge_map == std::vector<EdgeId>{3, 4, 5});
}
