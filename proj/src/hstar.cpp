#include "cosmopoly/hstar.hpp"

#include <stdexcept>

#include "cosmopoly/error.hpp"
#include "cosmopoly/linalg.hpp"

namespace cosmopoly {

namespace {

IntPolynomial histogram(const std::vector<int>& values) {
  std::vector<std::int64_t> c;
  for (int v : values) {
    if (static_cast<std::size_t>(v) >= c.size()) c.resize(static_cast<std::size_t>(v) + 1, 0);
    ++c[static_cast<std::size_t>(v)];
  }
  return IntPolynomial(std::move(c));
}

int point_count(const Multigraph& g) { return g.vertex_count() + 4 * g.edge_count() - 2 * g.loop_count(); }

}  // namespace

AnchorPoint base_anchor(const Multigraph& g) {
  const long nv = g.vertex_count();
  const long ne = g.edge_count();
  AnchorPoint a;
  const mpq_class qv(2 * nv + 1, 2 * nv * (nv + 1));
  const mpq_class qe(1, 2 * ne * (nv + 1));
  a.coords.assign(static_cast<std::size_t>(nv), qv);
  a.coords.insert(a.coords.end(), static_cast<std::size_t>(ne), qe);
  for (auto& c : a.coords) c.canonicalize();
  return a;
}

std::vector<mpq_class> barycentric(const PointTable& table, const Simplex& s, const std::vector<mpq_class>& q) {
  const std::size_t n = q.size();
  if (s.points.size() != n) throw Error("cell size does not match the ambient dimension");
  mpz_class denom = 1;
  for (const auto& c : q) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = q[k].get_num() * (denom / q[k].get_den());
  IntMatrix a(n, std::vector<mpz_class>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& p = table.at(s.points[j]).coords;
    for (std::size_t k = 0; k < n; ++k) a[k][j] = p[k];
  }
  auto x = solve_exact(std::move(a), std::move(b));
  if (!x) throw Error("degenerate cell: points are affinely dependent");
  for (auto& v : *x) {
    v /= denom;
    v.canonicalize();
  }
  return *x;
}

VisibilityResult visibility_counts(const Multigraph& g, const std::vector<Simplex>& simplices, int max_retries) {
  const PointTable table(g);
  const auto base = base_anchor(g);
  const std::size_t n = base.coords.size();
  // Alternating +-1, shifted to sum zero.
  std::vector<mpq_class> dir(n);
  mpq_class mean = 0;
  for (std::size_t k = 0; k < n; ++k) {
    dir[k] = k % 2 == 0 ? 1 : -1;
    mean += dir[k];
  }
  mean /= static_cast<long>(n);
  for (auto& d : dir) d -= mean;

  for (int index = 0; index <= max_retries; ++index) {
    AnchorPoint q = base;
    q.perturbation_index = index;
    if (index > 0) {
      mpq_class eps(1);
      mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), static_cast<mp_bitcnt_t>(10 + index));
      for (std::size_t k = 0; k < n; ++k) q.coords[k] += eps * dir[k];
    }
    bool positive = true;
    for (const auto& c : q.coords) positive = positive && sgn(c) > 0;
    if (!positive) continue;
    VisibilityResult r;
    bool general = true;
    for (const auto& s : simplices) {
      const auto lambda = barycentric(table, s, q.coords);
      int vis = 0;
      for (const auto& l : lambda) {
        const int sign = sgn(l);
        if (sign == 0) {
          general = false;
          break;
        }
        if (sign < 0) ++vis;
      }
      if (!general) break;
      r.visible.push_back(vis);
    }
    if (!general) continue;
    r.anchor = std::move(q);
    r.hstar = histogram(r.visible);
    return r;
  }
  throw AnchorFailure("no anchor point in general position after " + std::to_string(max_retries) + " perturbations");
}

IntPolynomial hstar_visibility(const Multigraph& g, const HstarOptions& options) {
  TriangulationOptions t;
  t.max_nodes = options.max_nodes;
  t.threads = options.threads;
  t.order_seed = options.order_seed;
  const auto tri = triangulate(g, t);
  return visibility_counts(g, tri.simplices).hstar;
}

std::vector<std::uint64_t> dilate_counts(const Multigraph& g, int t_max, std::uint64_t max_nodes) {
  std::vector<std::uint64_t> n;
  for (int t = 0; t <= t_max; ++t) n.push_back(count_dilate_points(g, t, max_nodes));
  return n;
}

IntPolynomial hstar_ehrhart(const Multigraph& g, const HstarOptions& options) {
  if (!is_connected(g)) throw DisconnectedGraph("Ehrhart route needs a connected graph");
  const int d = dimension(g);
  const int top = g.edge_count();
  const auto n = dilate_counts(g, top + 1, options.max_nodes);
  std::vector<std::int64_t> h(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    std::int64_t s = 0;
    for (int j = 0; j <= k; ++j) {
      const std::int64_t term = checked_mul(binomial(d + 1, j), static_cast<std::int64_t>(n[static_cast<std::size_t>(k - j)]));
      s = checked_add(s, j % 2 == 0 ? term : -term);
    }
    h[static_cast<std::size_t>(k)] = s;
  }
  IntPolynomial result(h);
  if (result[0] != 1 || !result.all_nonnegative()) {
    throw TheoremViolation("Ehrhart inversion gave " + result.to_string());
  }
  // The truncation to degree |E| must also predict the next dilate.
  const int t = top + 1;
  std::int64_t predicted = 0;
  for (int k = 0; k <= top; ++k) predicted = checked_add(predicted, checked_mul(result[k], binomial(t - k + d, d)));
  if (predicted != static_cast<std::int64_t>(n.back())) {
    throw TheoremViolation("h* of degree |E| predicts " + std::to_string(predicted) + " points in the " +
                           std::to_string(t) + "-th dilate, counted " + std::to_string(n.back()));
  }
  return result;
}

IntPolynomial hstar_closed_bundle(int m) {
  if (m < 1) throw std::invalid_argument("bundle multiplicity must be positive");
  const IntPolynomial one_z{1, 1};
  return one_z.pow(m) + IntPolynomial::monomial(2 * m, 1) * one_z.pow(m - 1);
}

IntPolynomial hstar_closed_multicycle(const std::vector<int>& a) {
  IntPolynomial all = IntPolynomial::constant(1);
  IntPolynomial doubles = IntPolynomial::constant(1);
  const IntPolynomial one_z{1, 1};
  for (int ai : a) {
    if (ai < 1) throw std::invalid_argument("multicycle multiplicities must be positive");
    all = all * hstar_closed_bundle(ai);
    doubles = doubles * IntPolynomial::monomial(2 * ai, 1) * one_z.pow(ai - 1);
  }
  return all - doubles;
}

IntPolynomial theta_hstar(int k, int l, int m) {
  if (k < 1 || l < 1 || m < 1) throw std::invalid_argument("theta path lengths must be positive");
  const IntPolynomial p{1, 3};
  const IntPolynomial two_z{0, 2};
  const IntPolynomial all = two_z.pow(k + l + m);
  return p.pow(k + l + m) - two_z.pow(k + l) * p.pow(m) - two_z.pow(k + m) * p.pow(l) - two_z.pow(l + m) * p.pow(k) -
         all + IntPolynomial::constant(3) * all;
}

std::optional<IntPolynomial> closed_form(const BlockClass& block) {
  switch (block.kind) {
    case BlockKind::Loop: return IntPolynomial{1, 1};
    case BlockKind::SingleEdge: return IntPolynomial{1, 3};
    case BlockKind::Bundle: return hstar_closed_bundle(block.multiplicities.at(0));
    case BlockKind::Multicycle: return hstar_closed_multicycle(block.multiplicities);
    case BlockKind::Other: return std::nullopt;
  }
  return std::nullopt;
}

IntPolynomial hstar_blocks(const Multigraph& g, const HstarOptions& options) {
  IntPolynomial h = IntPolynomial::constant(1);
  for (const auto& b : blocks(g)) {
    if (auto c = closed_form(b)) {
      h = h * *c;
    } else {
      h = h * hstar_visibility(edge_subgraph(g, b.edges).graph, options);
    }
  }
  return h;
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Visibility: return "visibility";
    case Method::Ehrhart: return "ehrhart";
    case Method::Blocks: return "blocks";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::Auto, Method::Visibility, Method::Ehrhart, Method::Blocks}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown method '" + name + "'");
}

HstarResult compute_hstar(const Multigraph& g, Method method, const HstarOptions& options) {
  switch (method) {
    case Method::Visibility: return {hstar_visibility(g, options), method};
    case Method::Ehrhart: return {hstar_ehrhart(g, options), method};
    case Method::Blocks: return {hstar_blocks(g, options), method};
    case Method::Auto: break;
  }
  bool blocks_fit = true;
  for (const auto& b : blocks(g)) {
    if (b.kind != BlockKind::Other) continue;
    const auto sub = edge_subgraph(g, b.edges).graph;
    if (point_count(sub) > options.visibility_point_cap) blocks_fit = false;
  }
  if (blocks_fit) return {hstar_blocks(g, options), Method::Blocks};
  if (is_connected(g) && dimension(g) <= options.ehrhart_dimension_cap) return {hstar_ehrhart(g, options), Method::Ehrhart};
  throw BudgetExceeded("graph is past the auto caps (a 2-connected block has more than " +
                       std::to_string(options.visibility_point_cap) + " lattice points and the dimension exceeds " +
                       std::to_string(options.ehrhart_dimension_cap) +
                       "); pick --method visibility or --method ehrhart explicitly");
}

IntPolynomial lower_bound(const Multigraph& g) {
  const int k = static_cast<int>(connected_components(g).size());
  const int nv = g.vertex_count();
  return IntPolynomial{1, 3}.pow(nv - k) * IntPolynomial{1, 1}.pow(g.edge_count() - nv + k);
}

IntPolynomial upper_bound(const Multigraph& g) { return IntPolynomial{1, 3}.pow(g.edge_count()); }

StructureReport check_structure_theorems(const Multigraph& g, const IntPolynomial& h, std::uint64_t codegree_nodes) {
  StructureReport r;
  const int ne = g.edge_count();
  const int nv = g.vertex_count();
  r.degree_ok = h.degree() == ne;
  if (!r.degree_ok) r.failures.push_back("degree " + std::to_string(h.degree()) + " != |E| = " + std::to_string(ne));
  const std::int64_t h1 = 3LL * ne - 2LL * g.loop_count();
  r.h1_ok = h[1] == h1;
  if (!r.h1_ok) r.failures.push_back("h*_1 = " + std::to_string(h[1]) + ", expected " + std::to_string(h1));

  const auto lb = lower_bound(g);
  r.lower_bound_holds = lb.dominated_by(h);
  r.lower_bound_equal = lb == h;
  r.equality_expected = true;
  for (const auto& b : blocks(g)) {
    if (b.kind != BlockKind::Loop && b.kind != BlockKind::SingleEdge) r.equality_expected = false;
  }
  if (!r.lower_bound_holds) r.failures.push_back("lower bound " + lb.to_string() + " not below h*");
  if (r.lower_bound_equal != r.equality_expected) {
    r.failures.push_back(r.lower_bound_equal ? "lower bound attained although a block is not a loop or edge"
                                             : "lower bound not attained although every block is a loop or edge");
  }

  r.palindromic = h.is_palindromic();
  r.palindromic_expected = g.loop_count() == ne;
  if (r.palindromic != r.palindromic_expected) {
    r.failures.push_back(r.palindromic ? "palindromic although some edge is not a loop"
                                       : "not palindromic although every edge is a loop");
  }

  if (is_connected(g)) {
    try {
      for (int t = 1; t <= nv; ++t) {
        if (count_interior_points(g, t, codegree_nodes) > 0) {
          r.codegree = t;
          break;
        }
      }
      if (!r.codegree || *r.codegree != nv) {
        r.failures.push_back("codegree " + (r.codegree ? std::to_string(*r.codegree) : std::string("> |V|")) +
                             " != |V| = " + std::to_string(nv));
        if (!r.codegree) r.codegree = -1;
      }
    } catch (const BudgetExceeded&) {
      r.codegree.reset();
    }
  }
  return r;
}

void enforce(const StructureReport& report) {
  if (report.ok()) return;
  std::string msg = "structure theorem check failed:";
  for (const auto& f : report.failures) msg += " [" + f + "]";
  throw TheoremViolation(msg);
}

UpperBoundReport check_upper_bound_conjecture(const Multigraph& g, const IntPolynomial& h) {
  UpperBoundReport r;
  r.bound = upper_bound(g);
  for (int k = 0; k <= h.degree(); ++k) {
    if (h[k] > r.bound[k]) r.violations.push_back(k);
  }
  r.holds = r.violations.empty();
  return r;
}

IntPolynomial statistic_polynomial(const Multigraph& g, const std::vector<Simplex>& simplices) {
  const PointTable table(g);
  std::vector<int> values;
  for (const auto& s : simplices) {
    const auto c = sq_db_counts(decorated_view(s, table, g));
    values.push_back(c.sq + c.db);
  }
  return histogram(values);
}

IntPolynomial statistic_polynomial(const Multigraph& g, const TriangulationOptions& options) {
  return statistic_polynomial(g, triangulate(g, options).simplices);
}

}  // namespace cosmopoly
