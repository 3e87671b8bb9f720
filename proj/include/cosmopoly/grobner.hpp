#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cosmopoly/budget.hpp"
#include "cosmopoly/multigraph.hpp"
#include "cosmopoly/polytope.hpp"

namespace cosmopoly {

/// Ring variables are identified with lattice points (same PointId).
using VarId = PointId;

/// Lex order on the variables: ranked.front() is the greatest variable.
struct TermOrder {
  std::vector<VarId> ranked;
  std::vector<int> rank_of;  // indexed by VarId, 0 = greatest

  static TermOrder from_ranking(std::vector<VarId> ranked);
  bool operator==(const TermOrder& o) const { return ranked == o.ranked; }
};

/// Exponent map; absent variables have exponent zero.
using Monomial = std::map<VarId, int>;

enum class BinomialFamily { Fundamental, ZigZag, Cyclic };

const char* to_string(BinomialFamily family);

/// lhs - rhs, with the underlined (expected leading) side on the left for
/// fundamental binomials.
struct Binomial {
  Monomial lhs;
  Monomial rhs;
  BinomialFamily family = BinomialFamily::Fundamental;
  std::string witness;
};

/// Support of a squarefree leading term, sorted ascending.
using Obstruction = std::vector<VarId>;

/// Class-ranked lex order: y-variables, then z-edge, t, z-vertex. Within the
/// y class forward points ascend by edge id and backward points descend,
/// which is the multicycle/bundle ordering when edges are listed in cycle
/// order. A nonzero seed shuffles each class deterministically.
TermOrder default_good_order(const Multigraph& g, std::uint64_t seed = 0);

/// The ordering used for multicycles and bundles, built from the detected
/// cycle (clockwise = cycle_order direction). Throws InvalidGraph when g is
/// not a single multicycle or bundle block.
TermOrder multicycle_good_order(const Multigraph& g);

bool is_good_order(const TermOrder& order, const Multigraph& g);

std::vector<Binomial> fundamental_binomials(const Multigraph& g);
std::vector<Binomial> zigzag_binomials(const Multigraph& g, NodeBudget& budget);
std::vector<Binomial> zigzag_binomials(const Multigraph& g);
std::vector<Binomial> cyclic_binomials(const Multigraph& g, NodeBudget& budget);
std::vector<Binomial> cyclic_binomials(const Multigraph& g);

/// F_G together with one cyclic binomial per unordered partition {C1, C2}
/// of each cycle (the representative whose C1 holds the cycle's first edge).
std::vector<Binomial> reduced_generators(const Multigraph& g);

/// Lex comparison of the two sides; support of the greater one.
Obstruction leading_support(const Binomial& b, const TermOrder& order);

/// Deduplicated, sorted union of leading supports over all three families.
std::vector<Obstruction> obstruction_set(const Multigraph& g, const TermOrder& order,
                                         std::uint64_t max_nodes = kDefaultMaxNodes);

/// Sum of exponent times lattice point: the exponent vector of phi(m).
std::vector<long long> monomial_image(const Monomial& m, const PointTable& table);

std::string to_string(const Monomial& m, const PointTable& table);

}  // namespace cosmopoly
