// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cosmopoly/error.hpp"
#include "cosmopoly/families.hpp"
#include "cosmopoly/graph_io.hpp"
#include "cosmopoly/hstar.hpp"

using namespace cosmopoly;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& what) {
    if (a == b) return;
    std::ostringstream s;
    s << what << ": got " << show(a) << ", expected " << show(b);
    failures_.push_back(s.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  static std::string show(const IntPolynomial& p) { return p.to_string(); }
  template <class T>
  static std::string show(const T& x) {
    std::ostringstream s;
    s << x;
    return s.str();
  }
  std::vector<std::string> failures_;
};

const IntPolynomial kEdge{1, 3};
const IntPolynomial kTriangle{1, 9, 27, 19};

void all_methods(Checks& c, const Multigraph& g, const IntPolynomial& expect, const std::string& name,
                 bool ehrhart = true) {
  c.equal(hstar_visibility(g), expect, name + " visibility");
  if (ehrhart) c.equal(hstar_ehrhart(g), expect, name + " ehrhart");
  c.equal(hstar_blocks(g), expect, name + " blocks");
}

void criterion1(Checks& c) {
  const auto g = make_path(1);
  all_methods(c, g, kEdge, "P1");
  c.equal(triangulate(g).simplices.size(), std::size_t{4}, "P1 cells");
  c.equal(statistic_polynomial(g), kEdge, "P1 statistic");
}

void criterion2(Checks& c) {
  for (int m = 2; m <= 3; ++m) {
    const auto expect = kEdge.pow(m);
    all_methods(c, make_path(m), expect, "path " + std::to_string(m), m == 2);
    all_methods(c, make_star(m), expect, "star " + std::to_string(m), m == 2);
  }
}

void criterion3(Checks& c) {
  const auto l1 = hstar_visibility(make_loops(1));
  const auto l2 = hstar_visibility(make_loops(2));
  c.equal(l1, IntPolynomial{1, 1}, "L1");
  c.equal(l2, IntPolynomial{1, 1}.pow(2), "L2");
  c.expect(check_structure_theorems(make_loops(2), l2).palindromic, "L2 palindromic");
  c.expect(check_structure_theorems(make_loops(2), l2).ok(), "L2 theorem checks");
  for (const auto& g : {make_path(1), make_path(2), make_cycle(3), make_bundle(2)}) {
    const auto r = check_structure_theorems(g, hstar_visibility(g));
    c.expect(!r.palindromic, "loopless graph reported palindromic");
    c.expect(r.ok(), "loopless theorem checks");
  }
}

void criterion4(Checks& c) {
  const IntPolynomial i2{1, 6, 5};
  const IntPolynomial i3{1, 9, 15, 7};
  c.equal(hstar_closed_bundle(2), i2, "I2 closed form");
  c.equal(hstar_closed_bundle(3), i3, "I3 closed form");
  for (int m = 1; m <= 3; ++m) {
    const auto g = make_bundle(m);
    const auto vis = hstar_visibility(g);
    c.equal(vis, hstar_closed_bundle(m), "I" + std::to_string(m) + " visibility");
    c.equal(statistic_polynomial(g), vis, "I" + std::to_string(m) + " statistic");
    c.equal(vis.evaluate(1), std::int64_t{(1 << m) * (1 + m)}, "I" + std::to_string(m) + " volume");
  }
}

void criterion5(Checks& c) {
  const auto g = make_cycle(3);
  all_methods(c, g, kTriangle, "C3");
  c.equal(triangulate(g).simplices.size(), std::size_t{56}, "C3 cells");
  // N(t) = sum_k h*_k C(t - k + d, d), d = 5.
  const auto n = dilate_counts(g, 3);
  for (int t = 0; t <= 3; ++t) {
    std::int64_t predicted = 0;
    for (int k = 0; k <= 3; ++k) predicted += kTriangle[k] * binomial(t - k + 5, 5);
    c.equal(static_cast<std::int64_t>(n[t]), predicted, "C3 N(" + std::to_string(t) + ")");
  }
  c.equal(facet_description(g).facets.size(), std::size_t{10}, "C3 facets");
}

void criterion6(Checks& c) {
  const std::vector<int> a{2, 1, 1};
  const auto g = make_multicycle(a);
  const IntPolynomial expect{1, 12, 50, 68, 29};
  c.equal(hstar_closed_multicycle(a), expect, "C211 closed form");
  TriangulationOptions o;
  o.multicycle_order = true;
  const auto tri = triangulate(g, o);
  c.equal(visibility_counts(g, tri.simplices).hstar, expect, "C211 visibility");
  c.equal(tri.simplices.size(), std::size_t{160}, "C211 cells");
  try {
    const auto report = validate_multicycle_structure(g, tri.simplices);
    c.equal(report.simplices, std::size_t{160}, "C211 validated cells");
  } catch (const Error& e) {
    c.expect(false, std::string("C211 structure: ") + e.what());
  }
  c.equal(statistic_polynomial(g, tri.simplices), expect, "C211 statistic");
}

void criterion7(Checks& c) {
  const auto expect = kTriangle * kTriangle;
  const auto shared = one_sum(make_cycle(3), 0, make_cycle(3), 0);
  const auto apart = disjoint_union(make_cycle(3), make_cycle(3));
  c.equal(hstar_visibility(shared), expect, "shared vertex visibility");
  c.equal(hstar_visibility(apart), expect, "disjoint union visibility");
  c.equal(hstar_blocks(shared), expect, "shared vertex blocks");
}

void criterion8(Checks& c) {
  const auto graphs = connected_multigraphs(7);
  std::size_t holds = 0;
  for (const auto& g : graphs) {
    const auto name = canonical_form(g);
    const auto h = hstar_visibility(g);
    const auto r = check_structure_theorems(g, h);
    for (const auto& f : r.failures) c.expect(false, name + ": " + f);
    c.expect(r.lower_bound_equal == r.equality_expected, name + ": lower bound equality case");
    const auto up = check_upper_bound_conjecture(g, h);
    c.expect(up.holds, name + ": upper-bound conjecture VIOLATED");
    holds += up.holds ? 1 : 0;
  }
  std::cout << "  " << graphs.size() << " graphs, upper-bound conjecture holds on " << holds << "\n";
}

void criterion9(Checks& c) {
  c.equal(theta_hstar(1, 1, 1), hstar_closed_bundle(3), "theta(1,1,1)");
  c.equal(theta_hstar(1, 1, 2), hstar_closed_multicycle({2, 1, 1}), "theta(1,1,2)");
  c.equal(theta_hstar(2, 2, 2).evaluate(1), std::int64_t{3456}, "theta(2,2,2)(1)");
  const auto k23 = make_theta(2, 2, 2);
  c.equal(PointTable(k23).size(), std::size_t{29}, "K23 lattice points");
  c.equal(dimension(k23), 10, "K23 dimension");
  const auto tri = triangulate(k23);
  c.equal(tri.simplices.size(), std::size_t{3456}, "K23 cells");
  c.equal(visibility_counts(k23, tri.simplices).hstar, theta_hstar(2, 2, 2), "K23 visibility");
}

void criterion10(Checks& c) {
  std::vector<Multigraph> graphs = {make_path(1), make_loops(2), make_cycle(3), make_bundle(3),
                                    make_multicycle({2, 1, 1}), make_theta(1, 2, 2)};
  for (const auto& g : connected_multigraphs(6)) graphs.push_back(g);
  std::size_t cells = 0;
  for (const auto& g : graphs) {
    const auto name = canonical_form(g);
    const auto tri = triangulate(g);
    const PointTable table(g);
    for (const auto& s : tri.simplices) {
      c.expect(normalized_volume(table, s.points) == 1, name + ": cell not unimodular");
      ++cells;
    }
    try {
      // visibility_counts only returns once no barycentric coordinate is zero.
      const auto r = visibility_counts(g, tri.simplices);
      for (const auto& s : tri.simplices) {
        for (const auto& l : barycentric(table, s, r.anchor.coords)) c.expect(sgn(l) != 0, name + ": anchor on a facet");
      }
    } catch (const AnchorFailure& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
  std::cout << "  " << graphs.size() << " graphs, " << cells << " cells checked\n";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Checks&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "single edge", criterion1},
      {2, "trees", criterion2},
      {3, "loops and palindromicity", criterion3},
      {4, "bundles", criterion4},
      {5, "triangle", criterion5},
      {6, "multicycle (2,1,1)", criterion6},
      {7, "one-sum and disjoint union", criterion7},
      {8, "structure theorems sweep |V|+|E| <= 7", criterion8},
      {9, "theta consistency and K_{2,3}", criterion9},
      {10, "anchor general position and unimodularity", criterion10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures().empty();
    failed += ok ? 0 : 1;
    std::cout << "criterion " << cr.id << " (" << cr.title << "): " << (ok ? "PASS" : "FAIL") << " [" << secs
              << " s]\n";
    for (const auto& f : c.failures()) std::cout << "  " << f << "\n";
    std::cout.flush();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
