#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cosmopoly/budget.hpp"
#include "cosmopoly/multigraph.hpp"

namespace cosmopoly {

/// Which lattice point of the cosmological polytope a coordinate vector is.
/// The same tags name the variables of the toric ring.
enum class PointKind { ZVertex, ZEdge, T, YForward, YBackward };

using PointId = int;

struct LatticePoint {
  PointKind kind = PointKind::ZVertex;
  int index = 0;            // vertex id for ZVertex, edge id otherwise
  std::vector<int> coords;  // |V| vertex coordinates, then |E| edge coordinates

  /// Stable short name: z_v3, z_e0, t_e0, y+_e0, y-_e0.
  std::string name() const;
};

/// Lattice points of C_G in canonical order: ZVertex for every vertex, then
/// per edge T, YForward, YBackward, ZEdge (loops: T, ZEdge only). PointIds
/// are positions in this list.
class PointTable {
 public:
  explicit PointTable(const Multigraph& g);

  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  const LatticePoint& at(PointId p) const { return points_.at(static_cast<std::size_t>(p)); }
  std::size_t size() const noexcept { return points_.size(); }
  int ambient_dimension() const noexcept { return ambient_; }

  /// -1 when the point does not exist (y-points of a loop).
  PointId id(PointKind kind, int index) const;

 private:
  int ambient_ = 0;
  int vertex_count_ = 0;
  std::vector<LatticePoint> points_;
  std::vector<PointId> edge_offset_;
  std::vector<char> edge_is_loop_;
};

std::vector<LatticePoint> lattice_points(const Multigraph& g);

/// Nonnegative normal c with c.p >= 0 on C_G, tight on a facet.
struct FacetInequality {
  Subgraph witness;
  std::vector<int> normal;

  long long evaluate(std::span<const int> x) const;
};

struct FacetDescription {
  std::vector<FacetInequality> facets;
  /// Witness pairs whose normals coincided; the later one is dropped.
  std::vector<std::pair<Subgraph, Subgraph>> collisions;
};

FacetDescription facet_description(const Multigraph& g, std::uint64_t max_items = 2'000'000);
std::vector<FacetInequality> facet_inequalities(const Multigraph& g, std::uint64_t max_items = 2'000'000);

int dimension(const Multigraph& g);

/// |tC_G ∩ Z^(V∪E)| by pruned coordinate-wise enumeration.
std::uint64_t count_dilate_points(const Multigraph& g, int t, std::uint64_t max_nodes = kDefaultMaxNodes);
/// Lattice points of tC_G strictly inside every facet.
std::uint64_t count_interior_points(const Multigraph& g, int t, std::uint64_t max_nodes = kDefaultMaxNodes);

}  // namespace cosmopoly
