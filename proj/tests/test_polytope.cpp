#include <doctest.h>

#include <algorithm>
#include <set>

#include "cosmopoly/error.hpp"
#include "cosmopoly/polytope.hpp"

using namespace cosmopoly;

TEST_CASE("lattice point counts") {
  CHECK(lattice_points(make_path(1)).size() == 6);
  CHECK(lattice_points(make_loops(1)).size() == 3);
  CHECK(lattice_points(make_cycle(3)).size() == 15);
  CHECK(lattice_points(make_theta(2, 2, 2)).size() == 29);
}

TEST_CASE("loop points are the segment and its midpoint") {
  std::set<std::vector<int>> pts;
  for (const auto& p : lattice_points(make_loops(1))) pts.insert(p.coords);
  CHECK(pts == std::set<std::vector<int>>{{2, -1}, {0, 1}, {1, 0}});
}

TEST_CASE("edge points and names") {
  const PointTable t(make_path(1));
  CHECK(t.at(t.id(PointKind::T, 0)).coords == std::vector<int>{1, 1, -1});
  CHECK(t.at(t.id(PointKind::YForward, 0)).coords == std::vector<int>{1, -1, 1});
  CHECK(t.at(t.id(PointKind::YBackward, 0)).coords == std::vector<int>{-1, 1, 1});
  CHECK(t.at(t.id(PointKind::ZEdge, 0)).coords == std::vector<int>{0, 0, 1});
  CHECK(t.at(t.id(PointKind::ZVertex, 1)).name() == "z_v1");
  CHECK(t.at(t.id(PointKind::YBackward, 0)).name() == "y-_e0");
  const PointTable loop(make_loops(1));
  CHECK(loop.id(PointKind::YForward, 0) == -1);
  CHECK(loop.id(PointKind::ZEdge, 0) == 2);
}

TEST_CASE("coordinate sums are one") {
  for (const auto& p : lattice_points(Multigraph(3, {{0, 1}, {1, 1}, {1, 2}, {1, 2}}))) {
    int s = 0;
    for (int c : p.coords) s += c;
    CHECK(s == 1);
  }
}

TEST_CASE("facet inequalities") {
  const auto edge = facet_inequalities(make_path(1));
  std::set<std::vector<int>> normals;
  for (const auto& f : edge) normals.insert(f.normal);
  CHECK(normals == std::set<std::vector<int>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});

  std::set<std::vector<int>> loop;
  for (const auto& f : facet_inequalities(make_loops(1))) loop.insert(f.normal);
  CHECK(loop == std::set<std::vector<int>>{{1, 2}, {1, 0}});

  CHECK(facet_inequalities(make_cycle(3)).size() == 10);
  CHECK(facet_description(make_bundle(2)).collisions.empty());
  CHECK_THROWS_AS(facet_inequalities(disjoint_union(make_path(1), make_path(1))), DisconnectedGraph);
}

TEST_CASE("dimension") {
  CHECK(dimension(make_path(1)) == 2);
  CHECK(dimension(make_loops(1)) == 1);
  CHECK(dimension(make_cycle(3)) == 5);
}

TEST_CASE("dilate counts match the oracle table") {
  CHECK(count_dilate_points(make_path(1), 0) == 1);
  CHECK(count_dilate_points(make_path(1), 1) == 6);
  CHECK(count_dilate_points(make_path(1), 2) == 15);
  CHECK(count_dilate_points(make_path(1), 3) == 28);
  CHECK(count_dilate_points(make_loops(1), 3) == 7);
  CHECK(count_dilate_points(make_path(2), 3) == 170);
  CHECK(count_dilate_points(make_cycle(3), 4) == 1311);
  CHECK(count_dilate_points(make_bundle(2), 3) == 100);
  CHECK(count_dilate_points(Multigraph(2, {{0, 0}, {0, 1}}), 3) == 72);
  CHECK_THROWS_AS(count_dilate_points(make_cycle(3), 4, 100), BudgetExceeded);
}

TEST_CASE("interior points give codegree |V|") {
  CHECK(count_interior_points(make_path(1), 1) == 0);
  CHECK(count_interior_points(make_path(1), 2) == 3);
  CHECK(count_interior_points(make_cycle(3), 2) == 0);
  CHECK(count_interior_points(make_cycle(3), 3) == 19);
}
