#include "cosmopoly/polytope.hpp"

#include <algorithm>
#include <map>

#include "cosmopoly/error.hpp"

namespace cosmopoly {

std::string LatticePoint::name() const {
  const std::string i = std::to_string(index);
  switch (kind) {
    case PointKind::ZVertex: return "z_v" + i;
    case PointKind::ZEdge: return "z_e" + i;
    case PointKind::T: return "t_e" + i;
    case PointKind::YForward: return "y+_e" + i;
    case PointKind::YBackward: return "y-_e" + i;
  }
  return "?";
}

PointTable::PointTable(const Multigraph& g)
    : ambient_(g.vertex_count() + g.edge_count()), vertex_count_(g.vertex_count()) {
  const auto n = static_cast<std::size_t>(ambient_);
  auto unit = [n](int k) {
    std::vector<int> c(n, 0);
    c[static_cast<std::size_t>(k)] = 1;
    return c;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) points_.push_back({PointKind::ZVertex, v, unit(v)});
  for (const auto& e : g.edges()) {
    edge_offset_.push_back(static_cast<PointId>(points_.size()));
    edge_is_loop_.push_back(e.is_loop() ? 1 : 0);
    const int f = vertex_count_ + e.id;
    auto t = unit(f);
    t[static_cast<std::size_t>(f)] = -1;
    t[static_cast<std::size_t>(e.u)] += 1;
    t[static_cast<std::size_t>(e.v)] += 1;
    points_.push_back({PointKind::T, e.id, t});
    if (!e.is_loop()) {
      auto fwd = unit(f);
      fwd[static_cast<std::size_t>(e.u)] += 1;
      fwd[static_cast<std::size_t>(e.v)] -= 1;
      auto bwd = unit(f);
      bwd[static_cast<std::size_t>(e.u)] -= 1;
      bwd[static_cast<std::size_t>(e.v)] += 1;
      points_.push_back({PointKind::YForward, e.id, fwd});
      points_.push_back({PointKind::YBackward, e.id, bwd});
    }
    points_.push_back({PointKind::ZEdge, e.id, unit(f)});
  }
}

PointId PointTable::id(PointKind kind, int index) const {
  if (kind == PointKind::ZVertex) return index >= 0 && index < vertex_count_ ? index : -1;
  if (index < 0 || index >= static_cast<int>(edge_offset_.size())) return -1;
  const PointId base = edge_offset_[static_cast<std::size_t>(index)];
  const bool loop = edge_is_loop_[static_cast<std::size_t>(index)] != 0;
  switch (kind) {
    case PointKind::T: return base;
    case PointKind::YForward: return loop ? -1 : base + 1;
    case PointKind::YBackward: return loop ? -1 : base + 2;
    case PointKind::ZEdge: return loop ? base + 1 : base + 3;
    default: return -1;
  }
}

std::vector<LatticePoint> lattice_points(const Multigraph& g) { return PointTable(g).points(); }

long long FacetInequality::evaluate(std::span<const int> x) const {
  long long s = 0;
  for (std::size_t k = 0; k < normal.size(); ++k) s += static_cast<long long>(normal[k]) * x[k];
  return s;
}

FacetDescription facet_description(const Multigraph& g, std::uint64_t max_items) {
  if (!is_connected(g)) throw DisconnectedGraph("facet description needs a connected graph");
  FacetDescription out;
  std::map<std::vector<int>, std::size_t> seen;
  const int nv = g.vertex_count();
  for (auto& h : connected_subgraphs(g, max_items)) {
    std::vector<int> c(static_cast<std::size_t>(nv + g.edge_count()), 0);
    std::vector<char> in_v(static_cast<std::size_t>(nv), 0);
    std::vector<char> in_e(static_cast<std::size_t>(g.edge_count()), 0);
    for (VertexId v : h.vertices) {
      in_v[static_cast<std::size_t>(v)] = 1;
      c[static_cast<std::size_t>(v)] = 1;
    }
    for (EdgeId e : h.edges) in_e[static_cast<std::size_t>(e)] = 1;
    for (const auto& e : g.edges()) {
      if (in_e[static_cast<std::size_t>(e.id)]) continue;
      // Endpoint multiplicity: a loop at a vertex of H counts twice.
      c[static_cast<std::size_t>(nv + e.id)] = in_v[static_cast<std::size_t>(e.u)] + in_v[static_cast<std::size_t>(e.v)];
    }
    auto [it, fresh] = seen.emplace(c, out.facets.size());
    if (!fresh) {
      out.collisions.emplace_back(out.facets[it->second].witness, h);
      continue;
    }
    out.facets.push_back(FacetInequality{std::move(h), std::move(c)});
  }
  return out;
}

std::vector<FacetInequality> facet_inequalities(const Multigraph& g, std::uint64_t max_items) {
  return facet_description(g, max_items).facets;
}

int dimension(const Multigraph& g) { return g.vertex_count() + g.edge_count() - 1; }

namespace {

// Enumerates integer x with sum t and c.x >= threshold for every facet.
// Coordinates range over t times the extent of the lattice points, which
// sits inside [-t, 2t]; partial sums and partial facet values prune.
class DilateCounter {
 public:
  DilateCounter(const Multigraph& g, int t, long long threshold, std::uint64_t max_nodes)
      : t_(t), threshold_(threshold), budget_(max_nodes, "dilate point counting") {
    if (t < 0) throw Error("dilation factor must be nonnegative");
    const auto desc = facet_description(g);
    for (const auto& f : desc.facets) normals_.push_back(f.normal);
    n_ = static_cast<std::size_t>(g.vertex_count() + g.edge_count());
    lo_.assign(n_, 0);
    hi_.assign(n_, 0);
    for (const auto& p : lattice_points(g)) {
      for (std::size_t k = 0; k < n_; ++k) {
        lo_[k] = std::min(lo_[k], static_cast<long long>(p.coords[k]) * t);
        hi_[k] = std::max(hi_[k], static_cast<long long>(p.coords[k]) * t);
      }
    }
    suffix_lo_.assign(n_ + 1, 0);
    suffix_hi_.assign(n_ + 1, 0);
    for (std::size_t k = n_; k-- > 0;) {
      suffix_lo_[k] = suffix_lo_[k + 1] + lo_[k];
      suffix_hi_[k] = suffix_hi_[k + 1] + hi_[k];
    }
    // Largest value each facet can still gain from coordinates k.. (normals
    // are nonnegative).
    facet_room_.assign(normals_.size(), std::vector<long long>(n_ + 1, 0));
    for (std::size_t f = 0; f < normals_.size(); ++f) {
      for (std::size_t k = n_; k-- > 0;) {
        facet_room_[f][k] = facet_room_[f][k + 1] + normals_[f][k] * hi_[k];
      }
    }
    partial_.assign(normals_.size(), 0);
  }

  std::uint64_t run() {
    if (t_ == 0) return threshold_ > 0 ? 0 : 1;
    return descend(0, t_);
  }

 private:
  std::uint64_t descend(std::size_t k, long long remaining) {
    budget_.charge();
    for (std::size_t f = 0; f < normals_.size(); ++f) {
      if (partial_[f] + facet_room_[f][k] < threshold_) return 0;
    }
    if (k + 1 == n_) {
      if (remaining < lo_[k] || remaining > hi_[k]) return 0;
      for (std::size_t f = 0; f < normals_.size(); ++f) {
        if (partial_[f] + normals_[f][k] * remaining < threshold_) return 0;
      }
      return 1;
    }
    const long long from = std::max(lo_[k], remaining - suffix_hi_[k + 1]);
    const long long to = std::min(hi_[k], remaining - suffix_lo_[k + 1]);
    std::uint64_t count = 0;
    for (long long x = from; x <= to; ++x) {
      for (std::size_t f = 0; f < normals_.size(); ++f) partial_[f] += normals_[f][k] * x;
      count += descend(k + 1, remaining - x);
      for (std::size_t f = 0; f < normals_.size(); ++f) partial_[f] -= normals_[f][k] * x;
    }
    return count;
  }

  long long t_;
  long long threshold_;
  NodeBudget budget_;
  std::size_t n_ = 0;
  std::vector<std::vector<int>> normals_;
  std::vector<long long> lo_, hi_, suffix_lo_, suffix_hi_;
  std::vector<std::vector<long long>> facet_room_;
  std::vector<long long> partial_;
};

}  // namespace

std::uint64_t count_dilate_points(const Multigraph& g, int t, std::uint64_t max_nodes) {
  return DilateCounter(g, t, 0, max_nodes).run();
}

std::uint64_t count_interior_points(const Multigraph& g, int t, std::uint64_t max_nodes) {
  return DilateCounter(g, t, 1, max_nodes).run();
}

}  // namespace cosmopoly
