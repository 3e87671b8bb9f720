#include "cosmopoly/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cosmopoly/error.hpp"

namespace cosmopoly {

namespace {

struct RawEdge {
  std::string u, v;
  int multiplicity = 1;
  int line = 0;
};

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_multiplicity(const std::string& tok, int line) {
  long long k = 0;
  if (tok.size() < 2 || tok[0] != '*' || !parse_int(tok.substr(1), k) || k < 1 || k > 1'000'000) {
    throw ParseError(line, "bad multiplicity '" + tok + "', expected *k with k >= 1");
  }
  return static_cast<int>(k);
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  std::vector<RawEdge> raw;
  long long header = -1;
  int header_line = 0;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertices") {
      if (header >= 0) throw ParseError(lineno, "duplicate vertices header");
      if (!raw.empty()) throw ParseError(lineno, "vertices header must precede the edges");
      if (tok.size() != 2 || !parse_int(tok[1], header) || header < 1) {
        throw ParseError(lineno, "expected 'vertices <n>' with n >= 1");
      }
      header_line = lineno;
      continue;
    }
    RawEdge e;
    e.line = lineno;
    if (tok.size() == 2 || tok.size() == 3) {
      e.u = tok[0];
      e.v = tok[1];
      if (tok.size() == 3) {
        e.multiplicity = parse_multiplicity(tok[2], lineno);
      } else if (auto star = e.v.find('*'); star != std::string::npos) {
        e.multiplicity = parse_multiplicity(e.v.substr(star), lineno);
        e.v.erase(star);
      }
    } else {
      throw ParseError(lineno, "expected 'u v' or 'u v *k'");
    }
    if (e.u.empty() || e.v.empty() || e.u.find('*') != std::string::npos) throw ParseError(lineno, "empty vertex label");
    raw.push_back(std::move(e));
  }
  if (raw.empty()) throw ParseError(header_line, "graph has no edges");

  bool numeric = true;
  long long max_index = -1;
  for (const auto& e : raw) {
    for (const auto* s : {&e.u, &e.v}) {
      long long x = 0;
      if (!parse_int(*s, x) || x < 0) {
        numeric = false;
      } else {
        max_index = std::max(max_index, x);
      }
    }
  }
  std::map<std::string, int> names;
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto resolve = [&](const std::string& s, int line) -> VertexId {
    if (numeric) {
      long long x = 0;
      parse_int(s, x);
      if (header >= 0 && x >= header) {
        throw ParseError(line, "vertex " + s + " out of range for 'vertices " + std::to_string(header) + "'");
      }
      return static_cast<VertexId>(x);
    }
    auto [it, fresh] = names.emplace(s, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(s);
    return it->second;
  };
  for (const auto& e : raw) {
    const VertexId u = resolve(e.u, e.line);
    const VertexId v = resolve(e.v, e.line);
    for (int k = 0; k < e.multiplicity; ++k) edges.emplace_back(u, v);
  }
  int n = 0;
  if (numeric) {
    if (max_index > 10'000'000) throw ParseError(raw.front().line, "vertex index too large");
    n = header >= 0 ? static_cast<int>(header) : static_cast<int>(max_index + 1);
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  } else {
    n = static_cast<int>(labels.size());
    if (header >= 0 && header != n) {
      throw ParseError(header_line, "header says " + std::to_string(header) + " vertices, edges name " + std::to_string(n));
    }
  }
  try {
    return ParsedGraph{Multigraph(n, edges), std::move(labels)};
  } catch (const InvalidGraph& ex) {
    throw ParseError(header_line > 0 ? header_line : raw.front().line, ex.what());
  }
}

ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_graph(in);
}

std::string write_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size();) {
    std::size_t j = i;
    while (j < es.size() && es[j].u == es[i].u && es[j].v == es[i].v) ++j;
    out << es[i].u << " " << es[i].v;
    if (j - i > 1) out << " *" << (j - i);
    out << "\n";
    i = j;
  }
  return out.str();
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList relabeled(const Multigraph& g, const std::vector<int>& pos) {
  EdgeList out;
  for (const auto& e : g.edges()) {
    int a = pos[static_cast<std::size_t>(e.u)];
    int b = pos[static_cast<std::size_t>(e.v)];
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string canonical_form(const Multigraph& g, std::uint64_t max_orders) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  // Colour refinement seeded by (loops, degree).
  std::vector<long long> color(n);
  for (std::size_t v = 0; v < n; ++v) {
    long long loops = 0, degree = 0;
    for (EdgeId e : g.incident(static_cast<VertexId>(v))) {
      if (g.edge(e).is_loop()) {
        ++loops;
        degree += 2;
      } else {
        ++degree;
      }
    }
    color[v] = loops * 1'000'000 + degree;
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<long long, std::vector<long long>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (EdgeId e : g.incident(static_cast<VertexId>(v))) {
        const auto& ed = g.edge(e);
        if (!ed.is_loop()) sig[v].second.push_back(color[static_cast<std::size_t>(ed.other(static_cast<VertexId>(v)))]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<long long> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      next[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
    }
    const bool stable = std::set<long long>(next.begin(), next.end()).size() ==
                        std::set<long long>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }
  // Vertices grouped by colour; positions are assigned class by class and
  // every order within a class is tried.
  std::vector<int> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<int>(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(color[static_cast<std::size_t>(a)], a) < std::pair(color[static_cast<std::size_t>(b)], b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && color[static_cast<std::size_t>(order[j])] == color[static_cast<std::size_t>(order[i])]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t total = 1;
  for (auto [a, b] : classes) {
    for (std::size_t k = 2; k <= b - a && total <= max_orders; ++k) total *= k;
  }
  auto evaluate = [&](const std::vector<int>& ord) {
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(ord[i])] = static_cast<int>(i);
    return relabeled(g, pos);
  };
  EdgeList best = evaluate(order);
  if (total <= max_orders) {
    // Odometer over the per-class permutations.
    std::vector<int> cur = order;
    for (;;) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        auto [a, b] = classes[c];
        if (std::next_permutation(cur.begin() + static_cast<long>(a), cur.begin() + static_cast<long>(b))) break;
      }
      if (c == classes.size()) break;
      best = std::min(best, evaluate(cur));
    }
  }
  std::ostringstream out;
  out << n << ":";
  for (auto [a, b] : best) out << " " << a << "-" << b;
  return out.str();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string canonical_hash(const Multigraph& g) { return fnv1a_hex(canonical_form(g)); }

}  // namespace cosmopoly
