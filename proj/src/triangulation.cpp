#include "cosmopoly/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cosmopoly/error.hpp"
#include "cosmopoly/linalg.hpp"

namespace cosmopoly {

namespace {

// Include/exclude backtracking over points in id order.
//
// cnt[o] counts included members of obstruction o, exc[o] excluded ones.
// An excluded point p stays justified while some obstruction through p has
// p as its only excluded member ("alive"); once every such obstruction
// picks up a second excluded member, p could be added back and the branch
// cannot be maximal. Every leaf reached is therefore maximal.
class Search {
 public:
  Search(std::size_t npoints, std::size_t target, const std::vector<Obstruction>& obs, NodeBudget& budget)
      : target_(target), obs_(obs), budget_(budget), occ_(npoints), state_(npoints, 0), alive_(npoints, 0),
        cnt_(obs.size(), 0), exc_(obs.size(), 0), exc_sum_(obs.size(), 0) {
    for (std::size_t o = 0; o < obs.size(); ++o) {
      for (VarId p : obs[o]) {
        if (p < 0 || static_cast<std::size_t>(p) >= npoints) throw Error("obstruction names an unknown point");
        occ_[static_cast<std::size_t>(p)].push_back(o);
      }
    }
  }

  std::size_t size() const noexcept { return occ_.size(); }

  bool can_include(std::size_t i) const {
    for (std::size_t o : occ_[i]) {
      if (cnt_[o] + 1 == obs_[o].size()) return false;
    }
    return true;
  }

  void include(std::size_t i) {
    for (std::size_t o : occ_[i]) ++cnt_[o];
    state_[i] = 1;
    chosen_.push_back(static_cast<PointId>(i));
    if (chosen_.size() > target_) {
      throw ObstructionViolation("obstruction-free point set with more than " + std::to_string(target_) + " points");
    }
  }

  void undo_include(std::size_t i) {
    for (std::size_t o : occ_[i]) --cnt_[o];
    state_[i] = 0;
    chosen_.pop_back();
  }

  // Returns false (with the state unchanged) if excluding i kills a branch.
  bool exclude(std::size_t i) {
    bool ok = true;
    for (std::size_t o : occ_[i]) {
      if (exc_[o] == 0) {
        ++alive_[i];
      } else if (exc_[o] == 1) {
        const auto p = static_cast<std::size_t>(exc_sum_[o]);
        if (--alive_[p] == 0) ok = false;
      }
      ++exc_[o];
      exc_sum_[o] += static_cast<long long>(i);
    }
    if (alive_[i] == 0) ok = false;
    state_[i] = 2;
    if (!ok) {
      undo_exclude(i);
      return false;
    }
    return true;
  }

  void undo_exclude(std::size_t i) {
    for (std::size_t o : occ_[i]) {
      exc_sum_[o] -= static_cast<long long>(i);
      --exc_[o];
      if (exc_[o] == 0) {
        --alive_[i];
      } else if (exc_[o] == 1) {
        ++alive_[static_cast<std::size_t>(exc_sum_[o])];
      }
    }
    state_[i] = 0;
  }

  void run(std::size_t i, std::vector<Simplex>& out) {
    budget_.charge();
    if (i == size()) {
      if (chosen_.size() != target_) {
        throw ObstructionViolation("maximal obstruction-free point set with " + std::to_string(chosen_.size()) +
                                   " points, expected " + std::to_string(target_));
      }
      out.push_back(Simplex{chosen_});
      return;
    }
    if (can_include(i)) {
      include(i);
      run(i + 1, out);
      undo_include(i);
    }
    if (exclude(i)) {
      run(i + 1, out);
      undo_exclude(i);
    }
  }

  // Decision prefixes of the given depth that survive the local checks.
  void prefixes(std::size_t i, std::size_t depth, std::vector<char>& path, std::vector<std::vector<char>>& out) {
    if (i == depth || i == size()) {
      out.push_back(path);
      return;
    }
    if (can_include(i)) {
      include(i);
      path.push_back(1);
      prefixes(i + 1, depth, path, out);
      path.pop_back();
      undo_include(i);
    }
    if (exclude(i)) {
      path.push_back(0);
      prefixes(i + 1, depth, path, out);
      path.pop_back();
      undo_exclude(i);
    }
  }

  void replay(const std::vector<char>& path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i]) {
        include(i);
      } else {
        exclude(i);
      }
    }
  }

 private:
  std::size_t target_;
  const std::vector<Obstruction>& obs_;
  NodeBudget& budget_;
  std::vector<std::vector<std::size_t>> occ_;
  std::vector<char> state_;
  std::vector<int> alive_;
  std::vector<std::size_t> cnt_;
  std::vector<int> exc_;
  std::vector<long long> exc_sum_;
  std::vector<PointId> chosen_;
};

}  // namespace

std::vector<Simplex> enumerate_triangulation(const Multigraph& g, const std::vector<Obstruction>& obstructions,
                                             const EnumerationOptions& options) {
  const PointTable table(g);
  const std::size_t target = static_cast<std::size_t>(g.vertex_count() + g.edge_count());
  NodeBudget budget(options.max_nodes, "triangulation search");
  std::vector<Simplex> out;
  if (options.threads <= 1) {
    Search(table.size(), target, obstructions, budget).run(0, out);
  } else {
    std::vector<std::vector<char>> prefixes;
    {
      Search root(table.size(), target, obstructions, budget);
      std::vector<char> path;
      std::size_t depth = 4;
      for (int t = options.threads; t > 1; t /= 2) ++depth;
      root.prefixes(0, std::min(depth, table.size()), path, prefixes);
    }
    std::vector<std::vector<Simplex>> parts(prefixes.size());
    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr failure;
    auto worker = [&] {
      for (;;) {
        std::size_t job = 0;
        {
          std::lock_guard lock(mu);
          if (next >= prefixes.size() || failure) return;
          job = next++;
        }
        try {
          Search s(table.size(), target, obstructions, budget);
          s.replay(prefixes[job]);
          s.run(prefixes[job].size(), parts[job]);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation triangulate(const Multigraph& g, const TriangulationOptions& options) {
  Triangulation t;
  t.order = options.multicycle_order ? multicycle_good_order(g) : default_good_order(g, options.order_seed);
  if (!is_good_order(t.order, g)) throw Error("term order is not good for this graph");
  t.obstructions = obstruction_set(g, t.order, options.max_nodes);
  t.simplices = enumerate_triangulation(g, t.obstructions, {options.max_nodes, options.threads});
  return t;
}

mpz_class normalized_volume(const PointTable& table, const std::vector<PointId>& points) {
  const auto n = static_cast<std::size_t>(table.ambient_dimension());
  if (points.size() != n) {
    throw Error("normalized volume needs " + std::to_string(n) + " points, got " + std::to_string(points.size()));
  }
  if (n == 1) return 1;
  const auto& base = table.at(points[0]).coords;
  IntMatrix m(n - 1, std::vector<mpz_class>(n - 1));
  for (std::size_t r = 1; r < n; ++r) {
    const auto& p = table.at(points[r]).coords;
    long prefix = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      prefix += p[k] - base[k];
      m[r - 1][k] = prefix;
    }
  }
  mpz_class det = bareiss_determinant(std::move(m));
  return abs(det);
}

DecoratedGraph decorated_view(const Simplex& s, const PointTable& table, const Multigraph& g) {
  DecoratedGraph d;
  d.nodes.assign(static_cast<std::size_t>(g.vertex_count()), NodeColor::Black);
  d.edge_roles.assign(static_cast<std::size_t>(g.edge_count()), 0);
  for (PointId p : s.points) {
    const auto& lp = table.at(p);
    const auto idx = static_cast<std::size_t>(lp.index);
    switch (lp.kind) {
      case PointKind::ZVertex: d.nodes[idx] = NodeColor::White; break;
      case PointKind::ZEdge: d.edge_roles[idx] |= kPlain; break;
      case PointKind::T: d.edge_roles[idx] |= kSquiggly; break;
      case PointKind::YForward: d.edge_roles[idx] |= kForward; break;
      case PointKind::YBackward: d.edge_roles[idx] |= kBackward; break;
    }
  }
  return d;
}

namespace {

std::string role_names(unsigned roles) {
  std::string s;
  auto add = [&](unsigned bit, const char* name) {
    if (!(roles & bit)) return;
    if (!s.empty()) s += '+';
    s += name;
  };
  add(kPlain, "plain");
  add(kSquiggly, "squiggly");
  add(kForward, "forward");
  add(kBackward, "backward");
  return s.empty() ? "none" : s;
}

}  // namespace

std::vector<std::string> role_anomalies(const DecoratedGraph& d) {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < d.edge_roles.size(); ++e) {
    const unsigned r = d.edge_roles[e];
    const int size = std::popcount(r);
    const bool ok = size == 1 || r == (kPlain | kForward) || r == (kPlain | kBackward);
    if (!ok) out.push_back("edge " + std::to_string(e) + " has roles " + role_names(r));
  }
  return out;
}

SqDb sq_db_counts(const DecoratedGraph& d) {
  SqDb c;
  for (unsigned r : d.edge_roles) {
    if (r & kSquiggly) ++c.sq;
    if (std::popcount(r) == 2) ++c.db;
  }
  return c;
}

std::string to_dot(const DecoratedGraph& d, const Multigraph& g) {
  std::ostringstream s;
  s << "digraph cell {\n  edge [arrowhead=none];\n";
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    s << "  v" << v << " [shape=circle, style=filled, fillcolor="
      << (d.nodes[v] == NodeColor::White ? "white" : "black") << "];\n";
  }
  for (const auto& e : g.edges()) {
    const unsigned r = d.edge_roles[static_cast<std::size_t>(e.id)];
    const std::string ends = "  v" + std::to_string(e.u) + " -> v" + std::to_string(e.v);
    const std::string label = "label=\"e" + std::to_string(e.id) + "\"";
    if (r & kPlain) s << ends << " [" << label << "];\n";
    if (r & kSquiggly) s << ends << " [" << label << ", style=dashed];\n";
    if (r & kForward) s << ends << " [" << label << ", arrowhead=normal];\n";
    if (r & kBackward) s << ends << " [" << label << ", dir=back, arrowtail=normal];\n";
  }
  s << "}\n";
  return s.str();
}

namespace {

enum class MultiType { A, B, C };

struct MultiEdgeView {
  MultiType type = MultiType::C;
  bool all_ccw_or_squiggly = true;
  bool all_plain_or_squiggly = true;
};

[[noreturn]] void structure_fail(std::size_t cell, const std::string& what) {
  throw StructureViolation("cell " + std::to_string(cell) + ": " + what);
}

// Classifies the multi-edge with edges `group` (sorted by id) running
// clockwise from vertex `from`.
MultiEdgeView classify(const Multigraph& g, const DecoratedGraph& d, const std::vector<EdgeId>& group, VertexId from,
                       std::size_t cell) {
  MultiEdgeView view;
  std::vector<unsigned> roles;
  std::vector<unsigned> cw_bits;
  int double_at = -1;
  for (std::size_t k = 0; k < group.size(); ++k) {
    const auto& e = g.edge(group[k]);
    const unsigned cw = e.u == from ? kForward : kBackward;
    const unsigned r = d.edge_roles[static_cast<std::size_t>(e.id)];
    roles.push_back(r);
    cw_bits.push_back(cw);
    const int size = std::popcount(r);
    if (size == 0 || size > 2) structure_fail(cell, "edge " + std::to_string(e.id) + " has roles " + role_names(r));
    if (size == 2) {
      if (!(r & kPlain) || (r & kSquiggly)) {
        structure_fail(cell, "edge " + std::to_string(e.id) + " is a double edge with roles " + role_names(r));
      }
      if (double_at >= 0) structure_fail(cell, "multi-edge at edge " + std::to_string(e.id) + " has two double edges");
      double_at = static_cast<int>(k);
    } else {
      const unsigned ccw = cw ^ (kForward | kBackward);
      if (r != ccw && r != kSquiggly) view.all_ccw_or_squiggly = false;
      if (r != kPlain && r != kSquiggly) view.all_plain_or_squiggly = false;
    }
  }
  if (double_at < 0) return view;
  const auto j = static_cast<std::size_t>(double_at);
  const bool type_a = roles[j] & cw_bits[j];
  view.type = type_a ? MultiType::A : MultiType::B;
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (k == j) continue;
    const unsigned cw = cw_bits[k];
    const unsigned ccw = cw ^ (kForward | kBackward);
    unsigned allowed = 0;
    if (type_a) {
      allowed = kSquiggly | (k < j ? kPlain : cw);
    } else {
      allowed = kSquiggly | (k < j ? ccw : kPlain);
    }
    if ((roles[k] & ~allowed) != 0) {
      structure_fail(cell, std::string("edge ") + std::to_string(group[k]) + " breaks the type " +
                               (type_a ? "A" : "B") + " pattern with roles " + role_names(roles[k]));
    }
  }
  return view;
}

}  // namespace

MulticycleReport validate_multicycle_structure(const Multigraph& g, const std::vector<Simplex>& simplices) {
  const auto bs = blocks(g);
  if (bs.size() != 1 || (bs[0].kind != BlockKind::Multicycle && bs[0].kind != BlockKind::Bundle)) {
    throw InvalidGraph("structure validation needs a single multicycle or bundle");
  }
  const bool bundle = bs[0].kind == BlockKind::Bundle;
  const auto& order = bs[0].cycle_order;
  const std::size_t n = order.size();
  const std::size_t multi_count = bundle ? 1 : n;
  std::vector<std::vector<EdgeId>> groups(multi_count);
  for (std::size_t i = 0; i < multi_count; ++i) {
    const VertexId a = order[i];
    const VertexId b = order[(i + 1) % n];
    for (const auto& e : g.edges()) {
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) groups[i].push_back(e.id);
    }
  }
  const PointTable table(g);
  MulticycleReport report;
  std::map<std::vector<unsigned>, std::size_t> seen;
  for (std::size_t cell = 0; cell < simplices.size(); ++cell) {
    const auto d = decorated_view(simplices[cell], table, g);
    std::vector<MultiEdgeView> views;
    for (std::size_t i = 0; i < multi_count; ++i) {
      views.push_back(classify(g, d, groups[i], order[i], cell));
      switch (views.back().type) {
        case MultiType::A: ++report.type_a; break;
        case MultiType::B: ++report.type_b; break;
        case MultiType::C: ++report.type_c; break;
      }
    }
    std::vector<std::size_t> white;
    for (std::size_t i = 0; i < n; ++i) {
      if (d.nodes[static_cast<std::size_t>(order[i])] == NodeColor::White) white.push_back(i);
    }
    if (white.empty()) structure_fail(cell, "no white node");
    if (bundle) {
      // Node order[0] alone with type A, order[1] alone with type B, or both
      // with plain/squiggly single edges.
      const auto& v = views[0];
      const bool ok = (white == std::vector<std::size_t>{0} && v.type == MultiType::A) ||
                      (white == std::vector<std::size_t>{1} && v.type == MultiType::B) ||
                      (white.size() == 2 && v.type == MultiType::C && v.all_plain_or_squiggly);
      if (!ok) structure_fail(cell, "bundle cell matches none of the admissible shapes");
    } else {
      for (std::size_t t = 0; t < white.size(); ++t) {
        const std::size_t start = white[t];
        const std::size_t stop = t + 1 < white.size() ? white[t + 1] : white[0] + n;
        std::vector<const MultiEdgeView*> arc;
        for (std::size_t i = start; i < stop; ++i) arc.push_back(&views[i % n]);
        bool ok = false;
        if (arc[0]->type == MultiType::A) {
          std::size_t c = 1;
          while (c < arc.size() && arc[c]->type != MultiType::C) ++c;
          ok = c < arc.size() && arc[c]->all_ccw_or_squiggly;
          for (std::size_t k = c + 1; ok && k < arc.size(); ++k) ok = arc[k]->type == MultiType::B;
        } else if (arc[0]->type == MultiType::C && arc[0]->all_plain_or_squiggly) {
          ok = true;
          for (std::size_t k = 1; ok && k < arc.size(); ++k) ok = arc[k]->type == MultiType::B;
        }
        if (!ok) structure_fail(cell, "arc leaving vertex " + std::to_string(order[start]) + " has no admissible shape");
      }
    }
    // Double edges keep their orientation, squiggly edges their mark.
    std::vector<unsigned> key(d.edge_roles.size(), 0);
    for (std::size_t e = 0; e < key.size(); ++e) {
      const unsigned r = d.edge_roles[e];
      if (std::popcount(r) == 2 || r == kSquiggly) key[e] = r;
    }
    auto [it, fresh] = seen.emplace(key, cell);
    if (!fresh) {
      structure_fail(cell, "same double and squiggly edges as cell " + std::to_string(it->second));
    }
    ++report.simplices;
  }
  return report;
}

}  // namespace cosmopoly
