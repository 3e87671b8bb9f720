#pragma once

#include <array>
#include <vector>

#include "cosmopoly/multigraph.hpp"

namespace cosmopoly {

/// Every connected multigraph with at least one edge and |V|+|E| <= max_size,
/// one per isomorphism class (by canonical_form), in order of (|V|, |E|)
/// and then canonical text.
std::vector<Multigraph> connected_multigraphs(int max_size);

/// Path-length triples k <= l <= m with k+l+m <= max_total.
std::vector<std::array<int, 3>> theta_triples(int max_total);

}  // namespace cosmopoly
