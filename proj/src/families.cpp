#include "cosmopoly/families.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "cosmopoly/graph_io.hpp"

namespace cosmopoly {

namespace {

// Multisets of size k over slots [first, slots): nondecreasing index runs.
void multisets(int slots, int k, int first, std::vector<int>& cur, const std::function<void()>& visit) {
  if (k == 0) {
    visit();
    return;
  }
  for (int s = first; s < slots; ++s) {
    cur.push_back(s);
    multisets(slots, k - 1, s, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Multigraph> connected_multigraphs(int max_size) {
  if (max_size > 12) throw std::invalid_argument("sweep size above 12 is not supported");
  std::vector<Multigraph> out;
  for (int nv = 1; nv + std::max(nv - 1, 1) <= max_size; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < nv; ++a) {
      for (int b = a; b < nv; ++b) slots.emplace_back(a, b);
    }
    for (int ne = std::max(nv - 1, 1); nv + ne <= max_size; ++ne) {
      std::map<std::string, Multigraph> found;
      std::vector<int> cur;
      multisets(static_cast<int>(slots.size()), ne, 0, cur, [&] {
        std::vector<std::pair<VertexId, VertexId>> edges;
        std::vector<char> touched(static_cast<std::size_t>(nv), 0);
        for (int s : cur) {
          edges.push_back(slots[static_cast<std::size_t>(s)]);
          touched[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)].first)] = 1;
          touched[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)].second)] = 1;
        }
        for (char t : touched) {
          if (!t) return;
        }
        Multigraph g(nv, edges);
        if (!is_connected(g)) return;
        found.emplace(canonical_form(g), std::move(g));
      });
      for (auto& [key, g] : found) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<std::array<int, 3>> theta_triples(int max_total) {
  std::vector<std::array<int, 3>> out;
  for (int k = 1; 3 * k <= max_total; ++k) {
    for (int l = k; k + 2 * l <= max_total; ++l) {
      for (int m = l; k + l + m <= max_total; ++m) out.push_back({k, l, m});
    }
  }
  return out;
}

}  // namespace cosmopoly
