#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosmopoly/multigraph.hpp"
#include "cosmopoly/polynomial.hpp"
#include "cosmopoly/polytope.hpp"
#include "cosmopoly/triangulation.hpp"

namespace cosmopoly {

struct AnchorPoint {
  std::vector<mpq_class> coords;
  /// 0 for the unperturbed point.
  int perturbation_index = 0;
};

/// Unperturbed anchor: q_v = (2|V|+1) / (2|V|(|V|+1)), q_e = 1 / (2|E|(|V|+1)).
AnchorPoint base_anchor(const Multigraph& g);

/// Barycentric coordinates of q in the cell (q = sum lambda_j p_j).
std::vector<mpq_class> barycentric(const PointTable& table, const Simplex& s, const std::vector<mpq_class>& q);

struct VisibilityResult {
  AnchorPoint anchor;
  /// Visible facets per cell, parallel to the simplex list.
  std::vector<int> visible;
  IntPolynomial hstar;
};

/// Half-open decomposition count. Starts from base_anchor and perturbs
/// along a fixed sum-zero direction with step 1/2^(10+k) until no cell
/// has q on a facet hyperplane. Throws AnchorFailure after max_retries.
VisibilityResult visibility_counts(const Multigraph& g, const std::vector<Simplex>& simplices, int max_retries = 16);

struct HstarOptions {
  std::uint64_t max_nodes = kDefaultMaxNodes;
  int threads = 1;
  std::uint64_t order_seed = 0;
  /// Largest lattice-point count the visibility route accepts under auto.
  int visibility_point_cap = 40;
  /// Largest dimension the Ehrhart route accepts under auto.
  int ehrhart_dimension_cap = 12;
};

IntPolynomial hstar_visibility(const Multigraph& g, const HstarOptions& options = {});

/// Inversion of N(0..|E|); one extra dilate N(|E|+1) is checked against
/// the prediction. Needs a connected graph.
IntPolynomial hstar_ehrhart(const Multigraph& g, const HstarOptions& options = {});

/// Lattice-point counts N(0..t_max).
std::vector<std::uint64_t> dilate_counts(const Multigraph& g, int t_max, std::uint64_t max_nodes = kDefaultMaxNodes);

IntPolynomial hstar_closed_bundle(int m);
IntPolynomial hstar_closed_multicycle(const std::vector<int>& a);
IntPolynomial theta_hstar(int k, int l, int m);

/// Product over blocks; blocks without a closed form go through the
/// visibility route on the extracted block.
IntPolynomial hstar_blocks(const Multigraph& g, const HstarOptions& options = {});

/// Closed form for a single classified block, if there is one.
std::optional<IntPolynomial> closed_form(const BlockClass& block);

enum class Method { Auto, Visibility, Ehrhart, Blocks };

const char* to_string(Method m);
/// Throws std::invalid_argument for an unknown name.
Method parse_method(const std::string& name);

struct HstarResult {
  IntPolynomial hstar;
  Method method = Method::Auto;  // the route actually taken
};

/// Auto picks blocks when every block has a closed form or is within the
/// visibility cap, else Ehrhart within the dimension cap, else throws
/// BudgetExceeded with guidance.
HstarResult compute_hstar(const Multigraph& g, Method method, const HstarOptions& options = {});

/// (1+3z)^(|V|-k) (1+z)^(|E|-|V|+k), k = number of components.
IntPolynomial lower_bound(const Multigraph& g);
/// (1+3z)^|E|
IntPolynomial upper_bound(const Multigraph& g);

struct StructureReport {
  bool degree_ok = false;
  bool h1_ok = false;
  bool lower_bound_holds = false;
  bool lower_bound_equal = false;
  bool equality_expected = false;  // every block is a loop or a single edge
  bool palindromic = false;
  bool palindromic_expected = false;  // every edge is a loop
  std::optional<int> codegree;        // empty when skipped (budget/disconnected)
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Degree, h*_1, lower bound with its equality case, Gorenstein
/// characterization and (within codegree_nodes) codegree = |V|.
StructureReport check_structure_theorems(const Multigraph& g, const IntPolynomial& h,
                                         std::uint64_t codegree_nodes = 2'000'000);
/// Throws TheoremViolation listing the failures.
void enforce(const StructureReport& report);

struct UpperBoundReport {
  IntPolynomial bound;
  bool holds = false;
  /// Degrees where h*_k > bound_k.
  std::vector<int> violations;
};

UpperBoundReport check_upper_bound_conjecture(const Multigraph& g, const IntPolynomial& h);

/// Sum over cells of z^(sq + db).
IntPolynomial statistic_polynomial(const Multigraph& g, const std::vector<Simplex>& simplices);
IntPolynomial statistic_polynomial(const Multigraph& g, const TriangulationOptions& options = {});

}  // namespace cosmopoly
