#include <doctest.h>

#include <set>

#include "cosmopoly/error.hpp"
#include "cosmopoly/families.hpp"
#include "cosmopoly/graph_io.hpp"

using namespace cosmopoly;

TEST_CASE("parse integer labels") {
  const auto p = parse_graph_text("# triangle\n0 1\n1 2\n2 0\n");
  CHECK(p.graph.vertex_count() == 3);
  CHECK(p.graph.edge_count() == 3);
  CHECK(p.labels == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("parse multiplicities, loops and header") {
  const auto p = parse_graph_text("vertices 2\n0 1 *3\n1 1\n");
  CHECK(p.graph.edge_count() == 4);
  CHECK(p.graph.loop_count() == 1);
  const auto q = parse_graph_text("0 1*2 # trailing comment\n");
  CHECK(q.graph.edge_count() == 2);
}

TEST_CASE("parse named labels in order of appearance") {
  const auto p = parse_graph_text("b a\na c\n");
  CHECK(p.labels == std::vector<std::string>{"b", "a", "c"});
  CHECK(p.graph.edges()[1].u == 1);
  CHECK(p.graph.edges()[1].v == 2);
}

TEST_CASE("parse errors carry a line number") {
  auto message = [](const std::string& text) {
    try {
      parse_graph_text(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("0 1\n0\n").find("line 2") != std::string::npos);
  CHECK(message("0 1 *0\n").find("line 1") != std::string::npos);
  CHECK(message("0 1 extra\n") != "no error");
  CHECK(message("") != "no error");
  // Vertex 2 is declared but isolated.
  CHECK(message("vertices 3\n0 1\n") != "no error");
  CHECK(message("vertices 1\n0 1\n") != "no error");
}

TEST_CASE("write and parse agree") {
  for (const auto& g : {make_cycle(3), make_bundle(3), make_multicycle({2, 1, 3}), make_loops(2),
                        Multigraph(3, {{0, 1}, {1, 1}, {1, 2}, {1, 2}})}) {
    const auto text = write_graph(g);
    CHECK(parse_graph_text(text).graph == g);
  }
  CHECK(write_graph(make_bundle(3)) == "vertices 2\n0 1 *3\n");
}

TEST_CASE("canonical form ignores labelling") {
  const Multigraph a(4, {{0, 1}, {1, 2}, {2, 3}, {1, 1}});
  const Multigraph b(4, {{3, 2}, {2, 1}, {1, 0}, {2, 2}});
  const Multigraph c(4, {{0, 1}, {1, 2}, {2, 3}, {0, 0}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a) != canonical_form(c));
  CHECK(canonical_hash(a) == canonical_hash(b));
  CHECK(canonical_hash(a).size() == 16);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("connected multigraph sweep") {
  // |V|+|E| <= 4: one to three loops, edge, bundle(2), edge with a loop.
  CHECK(connected_multigraphs(2).size() == 1);
  CHECK(connected_multigraphs(3).size() == 3);
  CHECK(connected_multigraphs(4).size() == 6);
  std::set<std::string> seen;
  for (const auto& g : connected_multigraphs(6)) {
    CHECK(is_connected(g));
    CHECK(g.vertex_count() + g.edge_count() <= 6);
    CHECK(seen.insert(canonical_form(g)).second);
  }
  CHECK_THROWS_AS(connected_multigraphs(13), std::invalid_argument);
}

TEST_CASE("theta triples") {
  CHECK(theta_triples(3).size() == 1);
  CHECK(theta_triples(4).size() == 2);
  for (const auto& [k, l, m] : theta_triples(8)) {
    CHECK(k <= l);
    CHECK(l <= m);
    CHECK(k + l + m <= 8);
  }
}
