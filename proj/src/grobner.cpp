#include "cosmopoly/grobner.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cosmopoly/error.hpp"

namespace cosmopoly {

TermOrder TermOrder::from_ranking(std::vector<VarId> ranked) {
  TermOrder o;
  o.rank_of.assign(ranked.size(), -1);
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    const auto v = static_cast<std::size_t>(ranked[r]);
    if (v >= ranked.size() || o.rank_of[v] >= 0) throw Error("term order ranking is not a permutation");
    o.rank_of[v] = static_cast<int>(r);
  }
  o.ranked = std::move(ranked);
  return o;
}

const char* to_string(BinomialFamily family) {
  switch (family) {
    case BinomialFamily::Fundamental: return "fundamental";
    case BinomialFamily::ZigZag: return "zigzag";
    case BinomialFamily::Cyclic: return "cyclic";
  }
  return "?";
}

namespace {

void shuffle_class(std::vector<VarId>& vars, std::mt19937_64& rng) {
  // Plain Fisher-Yates on raw engine output so the permutation does not
  // depend on the standard library's distribution implementation.
  for (std::size_t i = vars.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(vars[i - 1], vars[j]);
  }
}

// Point for the directed edge from -> to along edge e.
VarId directed_y(const Multigraph& g, const PointTable& table, EdgeId e, VertexId from) {
  const auto& ed = g.edge(e);
  return table.id(ed.u == from ? PointKind::YForward : PointKind::YBackward, e);
}

VarId z_edge(const PointTable& t, EdgeId e) { return t.id(PointKind::ZEdge, e); }
VarId z_vertex(const PointTable& t, VertexId v) { return t.id(PointKind::ZVertex, v); }

void for_each_fundamental(const Multigraph& g, const PointTable& table, const std::function<void(Binomial&&)>& emit) {
  for (const auto& e : g.edges()) {
    const VarId t = table.id(PointKind::T, e.id);
    const VarId zf = z_edge(table, e.id);
    const VarId zi = z_vertex(table, e.u);
    const std::string w = "edge " + std::to_string(e.id);
    if (e.is_loop()) {
      emit(Binomial{{{t, 1}, {zf, 1}}, {{zi, 2}}, BinomialFamily::Fundamental, w});
      continue;
    }
    const VarId zj = z_vertex(table, e.v);
    const VarId yij = table.id(PointKind::YForward, e.id);
    const VarId yji = table.id(PointKind::YBackward, e.id);
    emit(Binomial{{{yij, 1}, {yji, 1}}, {{zf, 2}}, BinomialFamily::Fundamental, w});
    emit(Binomial{{{yij, 1}, {t, 1}}, {{zi, 2}}, BinomialFamily::Fundamental, w});
    emit(Binomial{{{yji, 1}, {t, 1}}, {{zj, 2}}, BinomialFamily::Fundamental, w});
    emit(Binomial{{{yij, 1}, {zj, 1}}, {{zi, 1}, {zf, 1}}, BinomialFamily::Fundamental, w});
    emit(Binomial{{{yji, 1}, {zi, 1}}, {{zj, 1}, {zf, 1}}, BinomialFamily::Fundamental, w});
    emit(Binomial{{{t, 1}, {zf, 1}}, {{zi, 1}, {zj, 1}}, BinomialFamily::Fundamental, w});
  }
}

std::string describe_walk(const std::vector<VertexId>& vs, const std::vector<EdgeId>& es) {
  std::ostringstream s;
  for (std::size_t i = 0; i < es.size(); ++i) s << vs[i] << "-[e" << es[i] << "]-";
  s << (vs.size() > es.size() ? vs.back() : vs.front());
  return s.str();
}

void for_each_zigzag(const Multigraph& g, const PointTable& table, NodeBudget& budget,
                     const std::function<void(Binomial&&)>& emit) {
  for (const auto& p : simple_paths(g, budget)) {
    const std::size_t k = p.edges.size();
    const VertexId u = p.vertices.front();
    const VertexId v = p.vertices.back();
    const std::string walk = describe_walk(p.vertices, p.edges);
    // First edge in P1, last in P2; middle edges choose freely.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 2)); ++mask) {
      budget.charge();
      Binomial b;
      b.family = BinomialFamily::ZigZag;
      b.lhs[z_vertex(table, v)] += 1;
      b.rhs[z_vertex(table, u)] += 1;
      std::string parts;
      for (std::size_t i = 0; i < k; ++i) {
        const bool in_p1 = i == 0 || (i + 1 < k && (mask >> (i - 1) & 1U));
        const EdgeId e = p.edges[i];
        if (in_p1) {
          // Directed toward v.
          b.lhs[directed_y(g, table, e, p.vertices[i])] += 1;
          b.rhs[z_edge(table, e)] += 1;
        } else {
          b.lhs[z_edge(table, e)] += 1;
          b.rhs[directed_y(g, table, e, p.vertices[i + 1])] += 1;
        }
        parts += in_p1 ? '1' : '2';
      }
      b.witness = "path " + walk + " parts " + parts;
      emit(std::move(b));
    }
  }
}

void for_each_cyclic(const Multigraph& g, const PointTable& table, NodeBudget& budget, bool one_per_unordered,
                     const std::function<void(Binomial&&)>& emit) {
  for (const auto& c : simple_cycles(g, budget)) {
    const std::size_t k = c.length();
    if (k >= 63) throw BudgetExceeded("cycle too long for partition enumeration");
    const std::string walk = describe_walk(c.vertices, c.edges);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      if (one_per_unordered && !(mask & 1U)) continue;
      budget.charge();
      Binomial b;
      b.family = BinomialFamily::Cyclic;
      std::string parts;
      for (std::size_t i = 0; i < k; ++i) {
        const EdgeId e = c.edges[i];
        const VertexId from = c.vertices[i];
        const VertexId to = c.vertices[(i + 1) % k];
        if (mask >> i & 1U) {
          b.lhs[directed_y(g, table, e, from)] += 1;
          b.rhs[z_edge(table, e)] += 1;
          parts += '1';
        } else {
          b.lhs[z_edge(table, e)] += 1;
          b.rhs[directed_y(g, table, e, to)] += 1;
          parts += '2';
        }
      }
      b.witness = "cycle " + walk + " parts " + parts;
      emit(std::move(b));
    }
  }
}

std::vector<Binomial> collect(const std::function<void(const std::function<void(Binomial&&)>&)>& gen) {
  std::vector<Binomial> out;
  gen([&](Binomial&& b) { out.push_back(std::move(b)); });
  return out;
}

Obstruction support(const Monomial& m) {
  Obstruction s;
  for (const auto& [v, exp] : m) {
    if (exp > 0) s.push_back(v);
  }
  return s;
}

}  // namespace

TermOrder default_good_order(const Multigraph& g, std::uint64_t seed) {
  const PointTable table(g);
  std::vector<VarId> ys, backward, zedges, ts, zverts;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) {
      ys.push_back(table.id(PointKind::YForward, e.id));
      backward.push_back(table.id(PointKind::YBackward, e.id));
    }
    zedges.push_back(table.id(PointKind::ZEdge, e.id));
    ts.push_back(table.id(PointKind::T, e.id));
  }
  ys.insert(ys.end(), backward.rbegin(), backward.rend());
  for (VertexId v = 0; v < g.vertex_count(); ++v) zverts.push_back(table.id(PointKind::ZVertex, v));
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (auto* cls : {&ys, &zedges, &ts, &zverts}) shuffle_class(*cls, rng);
  }
  std::vector<VarId> ranked;
  for (const auto* cls : {&ys, &zedges, &ts, &zverts}) ranked.insert(ranked.end(), cls->begin(), cls->end());
  return TermOrder::from_ranking(std::move(ranked));
}

TermOrder multicycle_good_order(const Multigraph& g) {
  const auto bs = blocks(g);
  if (bs.size() != 1 || (bs[0].kind != BlockKind::Multicycle && bs[0].kind != BlockKind::Bundle)) {
    throw InvalidGraph("multicycle ordering needs a graph that is a single multicycle or bundle");
  }
  const PointTable table(g);
  const auto& order = bs[0].cycle_order;
  const std::size_t n = order.size();
  const std::size_t multi_edges = bs[0].kind == BlockKind::Bundle ? 1 : n;
  std::vector<std::vector<EdgeId>> groups(multi_edges);
  for (std::size_t i = 0; i < multi_edges; ++i) {
    const VertexId a = order[i];
    const VertexId b = order[(i + 1) % n];
    for (const auto& e : g.edges()) {
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) groups[i].push_back(e.id);
    }
  }
  std::vector<VarId> cw, ccw, zedges, ts, zverts;
  for (std::size_t i = 0; i < multi_edges; ++i) {
    for (EdgeId e : groups[i]) {
      cw.push_back(directed_y(g, table, e, order[i]));
      zedges.push_back(table.id(PointKind::ZEdge, e));
      ts.push_back(table.id(PointKind::T, e));
    }
  }
  for (std::size_t i = multi_edges; i-- > 0;) {
    for (auto it = groups[i].rbegin(); it != groups[i].rend(); ++it) {
      ccw.push_back(directed_y(g, table, *it, order[(i + 1) % n]));
    }
  }
  for (VertexId v : order) zverts.push_back(table.id(PointKind::ZVertex, v));
  std::vector<VarId> ranked;
  for (const auto* cls : {&cw, &ccw, &zedges, &ts, &zverts}) ranked.insert(ranked.end(), cls->begin(), cls->end());
  return TermOrder::from_ranking(std::move(ranked));
}

Obstruction leading_support(const Binomial& b, const TermOrder& order) {
  int best_rank = -1;
  bool lhs_leads = false;
  auto consider = [&](VarId v) {
    const auto li = b.lhs.find(v);
    const auto ri = b.rhs.find(v);
    const int le = li == b.lhs.end() ? 0 : li->second;
    const int re = ri == b.rhs.end() ? 0 : ri->second;
    if (le == re) return;
    const int r = order.rank_of.at(static_cast<std::size_t>(v));
    if (best_rank < 0 || r < best_rank) {
      best_rank = r;
      lhs_leads = le > re;
    }
  };
  for (const auto& [v, _] : b.lhs) consider(v);
  for (const auto& [v, _] : b.rhs) consider(v);
  if (best_rank < 0) throw Error("binomial with equal sides has no leading term: " + b.witness);
  return support(lhs_leads ? b.lhs : b.rhs);
}

bool is_good_order(const TermOrder& order, const Multigraph& g) {
  const PointTable table(g);
  if (order.ranked.size() != table.size()) return false;
  bool good = true;
  for_each_fundamental(g, table, [&](Binomial&& b) {
    if (leading_support(b, order) != support(b.lhs)) good = false;
  });
  if (!good) return false;
  // Cycle binomials: all-y side against all-z side, in both directions.
  NodeBudget budget(kDefaultMaxNodes, "cycle enumeration");
  for (const auto& c : simple_cycles(g, budget)) {
    const std::size_t k = c.length();
    Binomial cw, ccw;
    for (std::size_t i = 0; i < k; ++i) {
      const EdgeId e = c.edges[i];
      cw.lhs[directed_y(g, table, e, c.vertices[i])] += 1;
      ccw.lhs[directed_y(g, table, e, c.vertices[(i + 1) % k])] += 1;
      cw.rhs[z_edge(table, e)] += 1;
      ccw.rhs[z_edge(table, e)] += 1;
    }
    if (leading_support(cw, order) != support(cw.lhs)) return false;
    if (leading_support(ccw, order) != support(ccw.lhs)) return false;
  }
  return true;
}

std::vector<Binomial> fundamental_binomials(const Multigraph& g) {
  const PointTable table(g);
  return collect([&](const auto& emit) { for_each_fundamental(g, table, emit); });
}

std::vector<Binomial> zigzag_binomials(const Multigraph& g, NodeBudget& budget) {
  const PointTable table(g);
  return collect([&](const auto& emit) { for_each_zigzag(g, table, budget, emit); });
}

std::vector<Binomial> zigzag_binomials(const Multigraph& g) {
  NodeBudget budget(kDefaultMaxNodes, "zig-zag binomial generation");
  return zigzag_binomials(g, budget);
}

std::vector<Binomial> cyclic_binomials(const Multigraph& g, NodeBudget& budget) {
  const PointTable table(g);
  return collect([&](const auto& emit) { for_each_cyclic(g, table, budget, false, emit); });
}

std::vector<Binomial> cyclic_binomials(const Multigraph& g) {
  NodeBudget budget(kDefaultMaxNodes, "cyclic binomial generation");
  return cyclic_binomials(g, budget);
}

std::vector<Binomial> reduced_generators(const Multigraph& g) {
  const PointTable table(g);
  NodeBudget budget(kDefaultMaxNodes, "cyclic binomial generation");
  auto out = collect([&](const auto& emit) { for_each_fundamental(g, table, emit); });
  for_each_cyclic(g, table, budget, true, [&](Binomial&& b) { out.push_back(std::move(b)); });
  return out;
}

std::vector<Obstruction> obstruction_set(const Multigraph& g, const TermOrder& order, std::uint64_t max_nodes) {
  const PointTable table(g);
  NodeBudget budget(max_nodes, "obstruction generation");
  std::set<Obstruction> found;
  auto take = [&](Binomial&& b) { found.insert(leading_support(b, order)); };
  for_each_fundamental(g, table, take);
  for_each_zigzag(g, table, budget, take);
  for_each_cyclic(g, table, budget, false, take);
  return {found.begin(), found.end()};
}

std::vector<long long> monomial_image(const Monomial& m, const PointTable& table) {
  std::vector<long long> out(static_cast<std::size_t>(table.ambient_dimension()), 0);
  for (const auto& [v, exp] : m) {
    const auto& c = table.at(v).coords;
    for (std::size_t k = 0; k < c.size(); ++k) out[k] += static_cast<long long>(exp) * c[k];
  }
  return out;
}

std::string to_string(const Monomial& m, const PointTable& table) {
  std::string s;
  for (const auto& [v, exp] : m) {
    if (!s.empty()) s += '*';
    s += table.at(v).name();
    if (exp != 1) s += '^' + std::to_string(exp);
  }
  return s.empty() ? "1" : s;
}

}  // namespace cosmopoly
