#include "cosmopoly/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "cosmopoly/error.hpp"

namespace cosmopoly {

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count <= 0) throw InvalidGraph("vertex count must be positive");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidGraph("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    const Edge e{static_cast<EdgeId>(edges_.size()), u, v};
    edges_.push_back(e);
    incidence_[static_cast<std::size_t>(u)].push_back(e.id);
    if (u != v) {
      incidence_[static_cast<std::size_t>(v)].push_back(e.id);
    } else {
      ++loop_count_;
    }
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (incidence_[static_cast<std::size_t>(v)].empty()) {
      throw InvalidGraph("vertex " + std::to_string(v) + " is isolated");
    }
  }
}

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Loop: return "loop";
    case BlockKind::SingleEdge: return "edge";
    case BlockKind::Bundle: return "bundle";
    case BlockKind::Multicycle: return "multicycle";
    case BlockKind::Other: return "other";
  }
  return "?";
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    label[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() == 1; }

ExtractedGraph edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::set<VertexId> touched;
  for (EdgeId e : edges) {
    touched.insert(g.edge(e).u);
    touched.insert(g.edge(e).v);
  }
  std::vector<VertexId> vertex_map(touched.begin(), touched.end());
  std::map<VertexId, VertexId> local;
  for (std::size_t i = 0; i < vertex_map.size(); ++i) local[vertex_map[i]] = static_cast<VertexId>(i);
  std::vector<std::pair<VertexId, VertexId>> local_edges;
  for (EdgeId e : edges) local_edges.emplace_back(local[g.edge(e).u], local[g.edge(e).v]);
  return ExtractedGraph{Multigraph(static_cast<int>(vertex_map.size()), local_edges), vertex_map, edges};
}

namespace {

// Tarjan's biconnected components over non-loop edges. Parallel edges are
// distinguished by id, so a doubled edge is its own 2-connected block.
class BlockFinder {
 public:
  explicit BlockFinder(const Multigraph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.vertex_count()), -1), low_(disc_.size(), 0) {}

  std::vector<std::vector<EdgeId>> run() {
    for (VertexId s = 0; s < g_.vertex_count(); ++s) {
      if (disc_[static_cast<std::size_t>(s)] < 0) visit(s, -1);
    }
    return std::move(found_);
  }

 private:
  void visit(VertexId v, EdgeId via) {
    disc_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = timer_++;
    for (EdgeId e : g_.incident(v)) {
      if (e == via || g_.edge(e).is_loop()) continue;
      const VertexId w = g_.edge(e).other(v);
      const auto vi = static_cast<std::size_t>(v);
      const auto wi = static_cast<std::size_t>(w);
      if (disc_[wi] < 0) {
        stack_.push_back(e);
        visit(w, e);
        low_[vi] = std::min(low_[vi], low_[wi]);
        if (low_[wi] >= disc_[vi]) {
          std::vector<EdgeId> block;
          while (true) {
            const EdgeId top = stack_.back();
            stack_.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          std::sort(block.begin(), block.end());
          found_.push_back(std::move(block));
        }
      } else if (disc_[wi] < disc_[vi]) {
        stack_.push_back(e);
        low_[vi] = std::min(low_[vi], disc_[wi]);
      }
    }
  }

  const Multigraph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<EdgeId> stack_;
  std::vector<std::vector<EdgeId>> found_;
  int timer_ = 0;
};

BlockClass classify(const Multigraph& g, std::vector<EdgeId> edges) {
  BlockClass b;
  b.edges = std::move(edges);
  std::set<VertexId> vs;
  for (EdgeId e : b.edges) {
    vs.insert(g.edge(e).u);
    vs.insert(g.edge(e).v);
  }
  b.vertices.assign(vs.begin(), vs.end());

  if (b.edges.size() == 1) {
    b.kind = g.edge(b.edges.front()).is_loop() ? BlockKind::Loop : BlockKind::SingleEdge;
    return b;
  }
  if (b.vertices.size() == 2) {
    b.kind = BlockKind::Bundle;
    b.multiplicities = {static_cast<int>(b.edges.size())};
    b.cycle_order = b.vertices;
    return b;
  }

  std::map<VertexId, std::set<VertexId>> neighbours;
  for (EdgeId e : b.edges) {
    neighbours[g.edge(e).u].insert(g.edge(e).v);
    neighbours[g.edge(e).v].insert(g.edge(e).u);
  }
  const bool cycle_shape = std::all_of(neighbours.begin(), neighbours.end(),
                                       [](const auto& kv) { return kv.second.size() == 2; });
  if (!cycle_shape) {
    b.kind = BlockKind::Other;
    return b;
  }

  // A 2-connected graph whose vertices all have two distinct neighbours is a
  // cycle with multiplicities. Walk it from the smallest vertex.
  const std::set<EdgeId> in_block(b.edges.begin(), b.edges.end());
  const VertexId start = b.vertices.front();
  VertexId first_step = -1;
  for (EdgeId e : g.incident(start)) {
    if (in_block.count(e)) {
      first_step = g.edge(e).other(start);
      break;
    }
  }
  b.cycle_order = {start};
  VertexId prev = start;
  VertexId cur = first_step;
  while (cur != start) {
    b.cycle_order.push_back(cur);
    const auto& nb = neighbours[cur];
    const VertexId next = *nb.begin() == prev ? *nb.rbegin() : *nb.begin();
    prev = cur;
    cur = next;
  }
  const std::size_t n = b.cycle_order.size();
  b.multiplicities.assign(n, 0);
  for (EdgeId e : b.edges) {
    const auto& ed = g.edge(e);
    for (std::size_t i = 0; i < n; ++i) {
      const VertexId a = b.cycle_order[i];
      const VertexId c = b.cycle_order[(i + 1) % n];
      if ((ed.u == a && ed.v == c) || (ed.u == c && ed.v == a)) {
        ++b.multiplicities[i];
        break;
      }
    }
  }
  b.kind = BlockKind::Multicycle;
  return b;
}

}  // namespace

std::vector<BlockClass> blocks(const Multigraph& g) {
  auto groups = BlockFinder(g).run();
  for (const auto& e : g.edges()) {
    if (e.is_loop()) groups.push_back({e.id});
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<BlockClass> out;
  out.reserve(groups.size());
  for (auto& group : groups) out.push_back(classify(g, std::move(group)));
  return out;
}

namespace {

// Connected vertex sets with smallest element `root`, ESU style: every set
// is reached exactly once by only extending with exclusive neighbours.
class VertexSetEnumerator {
 public:
  VertexSetEnumerator(const Multigraph& g, std::function<void(const std::vector<VertexId>&)> emit)
      : g_(g), emit_(std::move(emit)) {
    adjacency_.resize(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      adjacency_[static_cast<std::size_t>(e.u)].insert(e.v);
      adjacency_[static_cast<std::size_t>(e.v)].insert(e.u);
    }
  }

  void run() {
    for (VertexId root = 0; root < g_.vertex_count(); ++root) {
      std::vector<VertexId> ext;
      for (VertexId w : adjacency_[static_cast<std::size_t>(root)]) {
        if (w > root) ext.push_back(w);
      }
      std::vector<VertexId> set{root};
      std::set<VertexId> closed_nbhd{root};
      closed_nbhd.insert(adjacency_[static_cast<std::size_t>(root)].begin(),
                         adjacency_[static_cast<std::size_t>(root)].end());
      extend(set, ext, closed_nbhd, root);
    }
  }

 private:
  void extend(std::vector<VertexId>& set, std::vector<VertexId> ext, const std::set<VertexId>& closed_nbhd,
              VertexId root) {
    std::vector<VertexId> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    emit_(sorted);
    while (!ext.empty()) {
      const VertexId w = ext.back();
      ext.pop_back();
      std::vector<VertexId> next_ext = ext;
      std::set<VertexId> next_closed = closed_nbhd;
      for (VertexId u : adjacency_[static_cast<std::size_t>(w)]) {
        if (u > root && !closed_nbhd.count(u)) next_ext.push_back(u);
        next_closed.insert(u);
      }
      set.push_back(w);
      extend(set, next_ext, next_closed, root);
      set.pop_back();
    }
  }

  const Multigraph& g_;
  std::function<void(const std::vector<VertexId>&)> emit_;
  std::vector<std::set<VertexId>> adjacency_;
};

bool spans_connected(const std::vector<VertexId>& vertices, const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::map<VertexId, VertexId> parent;
  for (VertexId v : vertices) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = vertices.size();
  for (EdgeId e : edges) {
    const VertexId a = find(g.edge(e).u);
    const VertexId b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace

std::vector<Subgraph> connected_subgraphs(const Multigraph& g, std::uint64_t max_items) {
  std::vector<Subgraph> out;
  auto charge = [&] {
    if (out.size() >= max_items) {
      throw BudgetExceeded("connected subgraph enumeration exceeded " + std::to_string(max_items) + " items");
    }
  };
  VertexSetEnumerator(g, [&](const std::vector<VertexId>& vertices) {
    const std::set<VertexId> inside(vertices.begin(), vertices.end());
    std::vector<EdgeId> links;
    std::vector<EdgeId> loops;
    for (const auto& e : g.edges()) {
      if (!inside.count(e.u) || !inside.count(e.v)) continue;
      (e.is_loop() ? loops : links).push_back(e.id);
    }
    if (links.size() >= 63 || loops.size() >= 63) {
      throw BudgetExceeded("connected subgraph enumeration: induced edge set too large");
    }
    // Loops never affect connectivity; they multiply the count freely.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << links.size()); ++mask) {
      std::vector<EdgeId> chosen;
      for (std::size_t k = 0; k < links.size(); ++k) {
        if (mask >> k & 1U) chosen.push_back(links[k]);
      }
      if (!spans_connected(vertices, g, chosen)) continue;
      for (std::uint64_t lmask = 0; lmask < (std::uint64_t{1} << loops.size()); ++lmask) {
        charge();
        std::vector<EdgeId> edges = chosen;
        for (std::size_t k = 0; k < loops.size(); ++k) {
          if (lmask >> k & 1U) edges.push_back(loops[k]);
        }
        std::sort(edges.begin(), edges.end());
        out.push_back(Subgraph{vertices, std::move(edges)});
      }
    }
  }).run();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> simple_paths(const Multigraph& g, NodeBudget& budget) {
  std::vector<Path> out;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  Path current;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    budget.charge();
    if (current.edges.size() >= 2) out.push_back(current);
    for (EdgeId e : g.incident(v)) {
      if (g.edge(e).is_loop()) continue;
      const VertexId w = g.edge(e).other(v);
      if (on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      current.vertices.push_back(w);
      current.edges.push_back(e);
      dfs(w);
      current.vertices.pop_back();
      current.edges.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    current = Path{{s}, {}};
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

std::vector<Path> simple_paths(const Multigraph& g) {
  NodeBudget budget(kDefaultMaxNodes, "simple path enumeration");
  return simple_paths(g, budget);
}

std::vector<Cycle> simple_cycles(const Multigraph& g, NodeBudget& budget) {
  std::vector<Cycle> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    const auto& inc = g.incident(s);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const Edge& a = g.edge(inc[i]);
        const Edge& b = g.edge(inc[j]);
        if (a.is_loop() || b.is_loop()) continue;
        const VertexId w = a.other(s);
        if (w == b.other(s) && w > s) out.push_back(Cycle{{s, w}, {a.id, b.id}});
      }
    }
  }

  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  Cycle current;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId root, VertexId v) {
    budget.charge();
    for (EdgeId e : g.incident(v)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      const VertexId w = ed.other(v);
      if (w == root) {
        // Close only once per direction pair: first edge id below closing id.
        if (current.edges.size() >= 2 && current.edges.front() < e) {
          Cycle c = current;
          c.edges.push_back(e);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (w < root || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      current.vertices.push_back(w);
      current.edges.push_back(e);
      dfs(root, w);
      current.vertices.pop_back();
      current.edges.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    current = Cycle{{s}, {}};
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

std::vector<Cycle> simple_cycles(const Multigraph& g) {
  NodeBudget budget(kDefaultMaxNodes, "simple cycle enumeration");
  return simple_cycles(g, budget);
}

Multigraph make_path(int edges) {
  if (edges < 1) throw InvalidGraph("path needs at least one edge");
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < edges; ++i) es.emplace_back(i, i + 1);
  return Multigraph(edges + 1, es);
}

Multigraph make_star(int edges) {
  if (edges < 1) throw InvalidGraph("star needs at least one edge");
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 1; i <= edges; ++i) es.emplace_back(0, i);
  return Multigraph(edges + 1, es);
}

Multigraph make_cycle(int length) { return make_multicycle(std::vector<int>(static_cast<std::size_t>(length), 1)); }

Multigraph make_multicycle(const std::vector<int>& multiplicities) {
  const int n = static_cast<int>(multiplicities.size());
  if (n < 3) throw InvalidGraph("multicycle needs at least three vertices");
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < n; ++i) {
    if (multiplicities[static_cast<std::size_t>(i)] < 1) throw InvalidGraph("multiplicities must be positive");
    for (int j = 0; j < multiplicities[static_cast<std::size_t>(i)]; ++j) es.emplace_back(i, (i + 1) % n);
  }
  return Multigraph(n, es);
}

Multigraph make_bundle(int multiplicity) {
  if (multiplicity < 1) throw InvalidGraph("bundle multiplicity must be positive");
  return Multigraph(2, std::vector<std::pair<VertexId, VertexId>>(static_cast<std::size_t>(multiplicity), {0, 1}));
}

Multigraph make_loops(int count) {
  if (count < 1) throw InvalidGraph("loop graph needs at least one loop");
  return Multigraph(1, std::vector<std::pair<VertexId, VertexId>>(static_cast<std::size_t>(count), {0, 0}));
}

Multigraph make_theta(int k, int l, int m) {
  if (k < 1 || l < 1 || m < 1) throw InvalidGraph("theta path lengths must be positive");
  std::vector<std::pair<VertexId, VertexId>> es;
  int next = 2;
  for (int len : {k, l, m}) {
    VertexId prev = 0;
    for (int step = 1; step < len; ++step) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, 1);
  }
  return Multigraph(next, es);
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& e : a.edges()) es.emplace_back(e.u, e.v);
  const int shift = a.vertex_count();
  for (const auto& e : b.edges()) es.emplace_back(e.u + shift, e.v + shift);
  return Multigraph(a.vertex_count() + b.vertex_count(), es);
}

Multigraph one_sum(const Multigraph& a, VertexId va, const Multigraph& b, VertexId vb) {
  if (va < 0 || va >= a.vertex_count() || vb < 0 || vb >= b.vertex_count()) {
    throw InvalidGraph("1-sum vertex out of range");
  }
  auto map_b = [&](VertexId x) {
    if (x == vb) return va;
    return a.vertex_count() + (x < vb ? x : x - 1);
  };
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& e : a.edges()) es.emplace_back(e.u, e.v);
  for (const auto& e : b.edges()) es.emplace_back(map_b(e.u), map_b(e.v));
  return Multigraph(a.vertex_count() + b.vertex_count() - 1, es);
}

}  // namespace cosmopoly
