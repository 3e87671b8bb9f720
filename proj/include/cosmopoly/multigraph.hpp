#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cosmopoly/budget.hpp"

namespace cosmopoly {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const noexcept { return u == v; }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with loops and parallel edges. Edge ids are the
/// positions in the edge list and fix the coordinate order of everything
/// built on top. Isolated vertices are rejected.
class Multigraph {
 public:
  Multigraph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int loop_count() const noexcept { return loop_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Edge ids incident to v, ascending. A loop appears once.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }

  bool operator==(const Multigraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_;
  int loop_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A (vertex-set, edge-subset) pair; both sorted ascending.
struct Subgraph {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  auto operator<=>(const Subgraph&) const = default;
};

/// Directed walk: edges[i] joins vertices[i] and vertices[i + 1].
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

/// Closed walk with a fixed orientation: edges[i] joins vertices[i] and
/// vertices[(i + 1) % length].
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::size_t length() const noexcept { return edges.size(); }
};

enum class BlockKind { Loop, SingleEdge, Bundle, Multicycle, Other };

const char* to_string(BlockKind kind);

/// One block of the block decomposition, classified by shape.
struct BlockClass {
  BlockKind kind = BlockKind::Other;
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending
  /// Bundle: {m}. Multicycle: multiplicity of each multi-edge in cycle order.
  std::vector<int> multiplicities;
  /// Multicycle and Bundle: vertices in traversal order starting at the
  /// smallest vertex and leaving it along its smallest incident edge.
  std::vector<VertexId> cycle_order;
};

/// Subgraph extracted from a parent graph, with index maps back to it.
struct ExtractedGraph {
  Multigraph graph;
  std::vector<VertexId> vertex_map;  // local -> parent
  std::vector<EdgeId> edge_map;      // local -> parent
};

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Edge-induced subgraph on the given parent edges; vertices are the
/// endpoints, relabelled in ascending parent order.
ExtractedGraph edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& edges);

/// Blocks ordered by smallest edge id. Loops are singleton blocks and
/// parallel edges always share a block.
std::vector<BlockClass> blocks(const Multigraph& g);

/// Every connected (vertex-set, edge-subset) pair with non-empty vertex set,
/// sorted. Throws BudgetExceeded after max_items pairs.
std::vector<Subgraph> connected_subgraphs(const Multigraph& g, std::uint64_t max_items = 2'000'000);

/// Directed simple paths with at least two edges; both directions emitted.
std::vector<Path> simple_paths(const Multigraph& g, NodeBudget& budget);
std::vector<Path> simple_paths(const Multigraph& g);

/// Vertex-distinct cycles of length >= 3 plus two-cycles from pairs of
/// parallel non-loop edges; each once, loops never.
std::vector<Cycle> simple_cycles(const Multigraph& g, NodeBudget& budget);
std::vector<Cycle> simple_cycles(const Multigraph& g);

// Named families.
Multigraph make_path(int edges);
Multigraph make_star(int edges);
Multigraph make_cycle(int length);
/// C_a: multi-edge i joins i and (i + 1) mod n with multiplicity a[i];
/// endpoints are stored in clockwise order.
Multigraph make_multicycle(const std::vector<int>& multiplicities);
Multigraph make_bundle(int multiplicity);
Multigraph make_loops(int count);
/// Three internally disjoint paths of the given lengths between vertex 0
/// and vertex 1.
Multigraph make_theta(int k, int l, int m);
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);
/// Glue vertex vb of b onto vertex va of a.
Multigraph one_sum(const Multigraph& a, VertexId va, const Multigraph& b, VertexId vb);

}  // namespace cosmopoly
