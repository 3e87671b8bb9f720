#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cosmopoly/budget.hpp"
#include "cosmopoly/grobner.hpp"
#include "cosmopoly/multigraph.hpp"
#include "cosmopoly/polytope.hpp"

namespace cosmopoly {

/// Maximal cell of the triangulation: |V|+|E| point ids, ascending.
struct Simplex {
  std::vector<PointId> points;
  auto operator<=>(const Simplex&) const = default;
};

struct EnumerationOptions {
  std::uint64_t max_nodes = kDefaultMaxNodes;
  /// Worker threads; the search splits on decisions for the first points.
  int threads = 1;
};

/// All inclusion-maximal point sets avoiding every obstruction, sorted.
/// Throws ObstructionViolation if an obstruction-free set grows past
/// |V|+|E| points or a maximal one ends up smaller.
std::vector<Simplex> enumerate_triangulation(const Multigraph& g, const std::vector<Obstruction>& obstructions,
                                             const EnumerationOptions& options = {});

struct TriangulationOptions {
  std::uint64_t max_nodes = kDefaultMaxNodes;
  int threads = 1;
  std::uint64_t order_seed = 0;
  /// Use multicycle_good_order instead of the default class order.
  bool multicycle_order = false;
};

struct Triangulation {
  TermOrder order;
  std::vector<Obstruction> obstructions;
  std::vector<Simplex> simplices;
};

/// Order, goodness check, obstruction set and cells in one call.
Triangulation triangulate(const Multigraph& g, const TriangulationOptions& options = {});

/// |det| of the difference vectors p_k - p_0 written in the basis
/// e_k - e_{k+1} of the sum-zero sublattice. Zero for dependent points.
mpz_class normalized_volume(const PointTable& table, const std::vector<PointId>& points);

enum class NodeColor { White, Black };

/// Bitmask of the lattice points of one edge present in a cell.
enum EdgeRole : unsigned { kPlain = 1, kSquiggly = 2, kForward = 4, kBackward = 8 };

struct DecoratedGraph {
  std::vector<NodeColor> nodes;
  std::vector<unsigned> edge_roles;
};

DecoratedGraph decorated_view(const Simplex& s, const PointTable& table, const Multigraph& g);

/// Edges whose role set is empty, has more than two roles, or is a pair
/// other than Plain plus one direction.
std::vector<std::string> role_anomalies(const DecoratedGraph& d);

struct SqDb {
  int sq = 0;
  int db = 0;
};

SqDb sq_db_counts(const DecoratedGraph& d);

/// Graphviz rendering of one cell's decorated graph.
std::string to_dot(const DecoratedGraph& d, const Multigraph& g);

struct MulticycleReport {
  std::size_t simplices = 0;
  std::size_t type_a = 0;
  std::size_t type_b = 0;
  std::size_t type_c = 0;
};

/// Checks every cell of a multicycle (or bundle) triangulation built with
/// multicycle_good_order: white nodes exist, each multi-edge is of type
/// A, B or C, each white-to-white arc follows one of the two admissible
/// patterns, and cells are determined by their double and squiggly edges.
/// Throws StructureViolation naming the first offending cell.
MulticycleReport validate_multicycle_structure(const Multigraph& g, const std::vector<Simplex>& simplices);

}  // namespace cosmopoly
