#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "cosmopoly/multigraph.hpp"

namespace cosmopoly {

struct ParsedGraph {
  Multigraph graph;
  /// Original label of each vertex index.
  std::vector<std::string> labels;
};

/// Text format: '#' starts a comment, an optional `vertices <n>` header,
/// then one edge per line as `u v` with an optional `*k` multiplicity
/// (`u v *k` or `u v*k`). When every label is a nonnegative integer the
/// labels are the vertex indices; otherwise labels are names numbered in
/// order of first appearance. Throws ParseError with the line number.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph read_graph_file(const std::string& path);

/// `vertices n` then the edge list in id order, consecutive equal edges
/// folded into `u v *k`. Parsing the output gives back the same graph.
std::string write_graph(const Multigraph& g);

/// Relabeling-invariant text: the lexicographically smallest sorted edge
/// list over vertex orders compatible with a degree refinement. Falls
/// back to the refined order alone when the search exceeds max_orders.
std::string canonical_form(const Multigraph& g, std::uint64_t max_orders = 200'000);

/// 16 hex digits (FNV-1a 64) of canonical_form.
std::string canonical_hash(const Multigraph& g);

std::string fnv1a_hex(const std::string& text);

}  // namespace cosmopoly
