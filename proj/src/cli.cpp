#include "cosmopoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "cosmopoly/cache.hpp"
#include "cosmopoly/error.hpp"
#include "cosmopoly/families.hpp"
#include "cosmopoly/graph_io.hpp"
#include "cosmopoly/hstar.hpp"

#ifndef COSMOPOLY_VERSION
#define COSMOPOLY_VERSION "0.0.0"
#endif

namespace cosmopoly {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "cosmopoly/1";

struct Settings {
  std::string command;
  std::string file;
  std::string kind;
  std::string method = "auto";
  bool json = false;
  std::uint64_t budget = kDefaultMaxNodes;
  std::string cache_dir;
  std::uint64_t order_seed = 0;
  int max_size = 0;  // 0: per-kind default
  int threads = 1;
  bool dot = false;
  bool multicycle_order = false;
};

struct Outcome {
  int code = exit_code::kOk;
  std::string text;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

json poly_json(const IntPolynomial& p) { return p.coeffs(); }

json graph_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}, {"hash", canonical_hash(g)}};
}

json base_doc(const Settings& s) { return {{"schema", kSchema}, {"command", s.command}}; }

std::string block_label(const BlockClass& b) {
  std::string s = to_string(b.kind);
  if (b.kind == BlockKind::Bundle || b.kind == BlockKind::Multicycle) {
    std::vector<std::string> m;
    for (int a : b.multiplicities) m.push_back(std::to_string(a));
    s += "(" + join(m, ",") + ")";
  }
  return s;
}

std::string coords_text(const std::vector<int>& c) {
  std::vector<std::string> parts;
  for (int x : c) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string set_text(const std::vector<int>& xs, const char* prefix) {
  std::vector<std::string> parts;
  for (int x : xs) parts.push_back(prefix + std::to_string(x));
  return "{" + join(parts, ",") + "}";
}

HstarOptions hstar_options(const Settings& s) {
  HstarOptions o;
  o.max_nodes = s.budget;
  o.threads = s.threads;
  o.order_seed = s.order_seed;
  return o;
}

TriangulationOptions tri_options(const Settings& s) {
  TriangulationOptions o;
  o.max_nodes = s.budget;
  o.threads = s.threads;
  o.order_seed = s.order_seed;
  o.multicycle_order = s.multicycle_order;
  return o;
}

bool single_cycle_block(const Multigraph& g) {
  const auto bs = blocks(g);
  return bs.size() == 1 && (bs[0].kind == BlockKind::Multicycle || bs[0].kind == BlockKind::Bundle);
}

// ---- per-graph commands ---------------------------------------------------

Outcome cmd_info(const Settings& s, const Multigraph& g) {
  const auto comps = connected_components(g);
  std::vector<std::string> block_names;
  for (const auto& b : blocks(g)) block_names.push_back(block_label(b));
  const bool connected = comps.size() == 1;
  std::optional<std::size_t> facets;
  if (connected) facets = facet_description(g, s.budget).facets.size();
  const auto points = PointTable(g).size();
  if (s.json) {
    json doc = base_doc(s);
    doc["graph"] = graph_json(g);
    doc["loops"] = g.loop_count();
    doc["components"] = comps.size();
    doc["blocks"] = block_names;
    doc["dimension"] = dimension(g);
    doc["lattice_points"] = points;
    doc["facets"] = facets ? json(*facets) : json(nullptr);
    return {exit_code::kOk, render(doc)};
  }
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "\n"
      << "edges: " << g.edge_count() << " (loops: " << g.loop_count() << ")\n"
      << "components: " << comps.size() << "\n"
      << "blocks: " << join(block_names, " ") << "\n"
      << "dimension: " << dimension(g) << "\n"
      << "lattice points: " << points << "\n"
      << "facets: " << (facets ? std::to_string(*facets) : std::string("n/a (disconnected)")) << "\n"
      << "canonical hash: " << canonical_hash(g) << "\n";
  return {exit_code::kOk, out.str()};
}

Outcome cmd_lattice_points(const Settings& s, const Multigraph& g) {
  const PointTable table(g);
  if (s.json) {
    json pts = json::array();
    for (const auto& p : table.points()) pts.push_back({{"name", p.name()}, {"coords", p.coords}});
    json doc = base_doc(s);
    doc["graph"] = graph_json(g);
    doc["points"] = pts;
    return {exit_code::kOk, render(doc)};
  }
  std::ostringstream out;
  for (const auto& p : table.points()) out << p.name() << " " << coords_text(p.coords) << "\n";
  return {exit_code::kOk, out.str()};
}

Outcome cmd_facets(const Settings& s, const Multigraph& g) {
  const auto desc = facet_description(g, s.budget);
  if (s.json) {
    json fs = json::array();
    for (const auto& f : desc.facets) {
      fs.push_back({{"vertices", f.witness.vertices}, {"edges", f.witness.edges}, {"normal", f.normal}});
    }
    json doc = base_doc(s);
    doc["graph"] = graph_json(g);
    doc["facets"] = fs;
    doc["collisions"] = desc.collisions.size();
    return {exit_code::kOk, render(doc)};
  }
  std::ostringstream out;
  for (const auto& f : desc.facets) {
    out << "H = " << set_text(f.witness.vertices, "v") << " " << set_text(f.witness.edges, "e") << ": normal "
        << coords_text(f.normal) << "\n";
  }
  out << "facets: " << desc.facets.size() << "\n";
  if (!desc.collisions.empty()) out << "coinciding normals dropped: " << desc.collisions.size() << "\n";
  return {exit_code::kOk, out.str()};
}

Outcome cmd_triangulate(const Settings& s, const Multigraph& g) {
  const auto tri = triangulate(g, tri_options(s));
  const PointTable table(g);
  std::optional<MulticycleReport> structure;
  if (s.multicycle_order) structure = validate_multicycle_structure(g, tri.simplices);
  std::vector<std::string> order;
  for (VarId v : tri.order.ranked) order.push_back(table.at(v).name());
  auto names = [&](const std::vector<PointId>& ids) {
    std::vector<std::string> n;
    for (PointId p : ids) n.push_back(table.at(p).name());
    return n;
  };
  if (s.json) {
    json obs = json::array();
    for (const auto& o : tri.obstructions) obs.push_back(names(o));
    json cells = json::array();
    for (const auto& c : tri.simplices) {
      const auto d = decorated_view(c, table, g);
      const auto sd = sq_db_counts(d);
      json cell = {{"points", names(c.points)}, {"sq", sd.sq}, {"db", sd.db}};
      if (s.dot) cell["dot"] = to_dot(d, g);
      cells.push_back(cell);
    }
    json doc = base_doc(s);
    doc["graph"] = graph_json(g);
    doc["order"] = order;
    doc["obstructions"] = obs;
    doc["cells"] = cells;
    if (structure) {
      doc["structure"] = {{"cells", structure->simplices},
                          {"type_a", structure->type_a},
                          {"type_b", structure->type_b},
                          {"type_c", structure->type_c}};
    }
    return {exit_code::kOk, render(doc)};
  }
  std::ostringstream out;
  out << "order: " << join(order, " > ") << "\n";
  out << "obstructions: " << tri.obstructions.size() << "\n";
  out << "cells: " << tri.simplices.size() << "\n";
  for (const auto& c : tri.simplices) {
    const auto d = decorated_view(c, table, g);
    const auto sd = sq_db_counts(d);
    out << "{" << join(names(c.points), ", ") << "} sq=" << sd.sq << " db=" << sd.db << "\n";
    if (s.dot) out << to_dot(d, g);
  }
  if (structure) {
    out << "structure: ok (type A " << structure->type_a << ", type B " << structure->type_b << ", type C "
        << structure->type_c << ")\n";
  }
  return {exit_code::kOk, out.str()};
}

Outcome cmd_hstar(const Settings& s, const Multigraph& g) {
  const auto r = compute_hstar(g, parse_method(s.method), hstar_options(s));
  if (s.json) {
    json doc = base_doc(s);
    doc["graph"] = graph_json(g);
    doc["method"] = to_string(r.method);
    doc["hstar"] = poly_json(r.hstar);
    doc["volume"] = r.hstar.evaluate(1);
    doc["degree"] = r.hstar.degree();
    doc["codegree"] = dimension(g) + 1 - r.hstar.degree();
    return {exit_code::kOk, render(doc)};
  }
  return {exit_code::kOk, "h* = " + r.hstar.to_string() + "\n"};
}

Outcome cmd_volume(const Settings& s, const Multigraph& g) {
  const auto r = compute_hstar(g, parse_method(s.method), hstar_options(s));
  if (s.json) {
    json doc = base_doc(s);
    doc["graph"] = graph_json(g);
    doc["method"] = to_string(r.method);
    doc["volume"] = r.hstar.evaluate(1);
    return {exit_code::kOk, render(doc)};
  }
  return {exit_code::kOk, "volume = " + std::to_string(r.hstar.evaluate(1)) + "\n"};
}

struct MethodRun {
  std::string name;
  std::optional<IntPolynomial> value;
  std::string note;    // skipped reason or extra detail
  bool failed = false;  // a check inside the method failed
};

Outcome cmd_verify(const Settings& s, const Multigraph& g) {
  const auto opts = hstar_options(s);
  std::vector<MethodRun> runs;
  std::optional<IntPolynomial> statistic;
  std::vector<std::string> failures;

  // Visibility, with unimodularity of every cell.
  {
    MethodRun r{"visibility", {}, {}, false};
    try {
      TriangulationOptions t = tri_options(s);
      t.multicycle_order = false;
      const auto tri = triangulate(g, t);
      const PointTable table(g);
      std::size_t bad = 0;
      for (const auto& c : tri.simplices) {
        if (normalized_volume(table, c.points) != 1) ++bad;
      }
      const auto vis = visibility_counts(g, tri.simplices);
      r.value = vis.hstar;
      r.note = std::to_string(tri.simplices.size()) + " cells, anchor perturbation " +
               std::to_string(vis.anchor.perturbation_index);
      if (bad) {
        r.failed = true;
        failures.push_back(std::to_string(bad) + " cells are not unimodular");
      }
      statistic = statistic_polynomial(g, tri.simplices);
    } catch (const BudgetExceeded& e) {
      r.note = std::string("skipped: ") + e.what();
    } catch (const Error& e) {
      r.failed = true;
      r.note = e.what();
      failures.push_back(std::string("visibility: ") + e.what());
    }
    runs.push_back(std::move(r));
  }
  {
    MethodRun r{"ehrhart", {}, {}, false};
    if (!is_connected(g)) {
      r.note = "skipped: graph is disconnected";
    } else {
      try {
        r.value = hstar_ehrhart(g, opts);
      } catch (const BudgetExceeded& e) {
        r.note = std::string("skipped: ") + e.what();
      } catch (const Error& e) {
        r.failed = true;
        r.note = e.what();
        failures.push_back(std::string("ehrhart: ") + e.what());
      }
    }
    runs.push_back(std::move(r));
  }
  {
    MethodRun r{"blocks", {}, {}, false};
    try {
      r.value = hstar_blocks(g, opts);
    } catch (const BudgetExceeded& e) {
      r.note = std::string("skipped: ") + e.what();
    } catch (const Error& e) {
      r.failed = true;
      r.note = e.what();
      failures.push_back(std::string("blocks: ") + e.what());
    }
    runs.push_back(std::move(r));
  }

  std::optional<IntPolynomial> agreed;
  bool agree = true;
  for (const auto& r : runs) {
    if (!r.value) continue;
    if (!agreed) {
      agreed = r.value;
    } else if (*agreed != *r.value) {
      agree = false;
    }
  }
  if (!agree) failures.push_back("methods disagree");

  std::optional<StructureReport> structure;
  std::optional<UpperBoundReport> upper;
  if (agreed && agree) {
    structure = check_structure_theorems(g, *agreed);
    for (const auto& f : structure->failures) failures.push_back(f);
    upper = check_upper_bound_conjecture(g, *agreed);
  }
  std::optional<bool> statistic_holds;
  if (statistic && agreed && agree) statistic_holds = *statistic == *agreed;

  std::optional<MulticycleReport> cycle_structure;
  std::string cycle_error;
  if (single_cycle_block(g)) {
    try {
      TriangulationOptions t = tri_options(s);
      t.multicycle_order = true;
      cycle_structure = validate_multicycle_structure(g, triangulate(g, t).simplices);
    } catch (const BudgetExceeded&) {
    } catch (const StructureViolation& e) {
      cycle_error = e.what();
      failures.push_back(std::string("cell structure: ") + e.what());
    }
  }

  int code = exit_code::kOk;
  if (!failures.empty()) {
    code = exit_code::kCheckFailed;
  } else if (!agreed) {
    code = exit_code::kBudget;
  }

  if (s.json) {
    json doc = base_doc(s);
    doc["graph"] = graph_json(g);
    json methods = json::object();
    for (const auto& r : runs) {
      methods[r.name] = {{"hstar", r.value ? poly_json(*r.value) : json(nullptr)}, {"note", r.note}};
    }
    doc["methods"] = methods;
    doc["agree"] = agree;
    if (agreed && agree) {
      doc["hstar"] = poly_json(*agreed);
      doc["volume"] = agreed->evaluate(1);
      doc["degree"] = agreed->degree();
    }
    json checks = json::object();
    if (structure) {
      checks["degree"] = structure->degree_ok;
      checks["h1"] = structure->h1_ok;
      checks["lower_bound"] = structure->lower_bound_holds;
      checks["lower_bound_equal"] = structure->lower_bound_equal;
      checks["lower_bound_equal_expected"] = structure->equality_expected;
      checks["palindromic"] = structure->palindromic;
      checks["palindromic_expected"] = structure->palindromic_expected;
      checks["codegree"] = structure->codegree ? json(*structure->codegree) : json(nullptr);
    }
    if (cycle_structure) checks["cell_structure"] = true;
    if (!cycle_error.empty()) checks["cell_structure"] = false;
    doc["checks"] = checks;
    json conj = json::object();
    if (upper) conj["upper_bound"] = upper->holds ? "HOLDS" : "VIOLATED";
    if (statistic) conj["statistic"] = {{"polynomial", poly_json(*statistic)},
                                        {"status", statistic_holds ? (*statistic_holds ? "HOLDS" : "VIOLATED") : "n/a"}};
    doc["conjectures"] = conj;
    doc["failures"] = failures;
    doc["result"] = code == exit_code::kOk ? "PASS" : (code == exit_code::kBudget ? "INCOMPLETE" : "FAIL");
    return {code, render(doc)};
  }
  std::ostringstream out;
  for (const auto& r : runs) {
    out << r.name << ": " << (r.value ? r.value->to_string() : std::string("-"));
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
  }
  out << "agreement: " << (agree ? "ok" : "FAILED") << "\n";
  if (statistic) {
    out << "statistic: " << statistic->to_string() << " ("
        << (statistic_holds ? (*statistic_holds ? "HOLDS" : "VIOLATED") : "n/a") << ")\n";
  }
  if (structure) {
    auto mark = [](bool b) { return b ? "ok" : "FAILED"; };
    out << "degree = |E|: " << mark(structure->degree_ok) << "\n";
    out << "h*_1 = 3|E| - 2 loops: " << mark(structure->h1_ok) << "\n";
    out << "lower bound " << lower_bound(g).to_string() << ": "
        << mark(structure->lower_bound_holds && structure->lower_bound_equal == structure->equality_expected)
        << " (equality " << (structure->lower_bound_equal ? "yes" : "no") << ")\n";
    out << "palindromic: " << (structure->palindromic ? "yes" : "no") << " "
        << mark(structure->palindromic == structure->palindromic_expected) << "\n";
    if (structure->codegree) {
      out << "codegree: " << *structure->codegree << " " << mark(*structure->codegree == g.vertex_count()) << "\n";
    } else {
      out << "codegree: skipped\n";
    }
  }
  if (cycle_structure) out << "cell structure: ok (" << cycle_structure->simplices << " cells)\n";
  if (!cycle_error.empty()) out << "cell structure: FAILED (" << cycle_error << ")\n";
  if (upper) out << "upper-bound conjecture: " << (upper->holds ? "HOLDS" : "VIOLATED") << "\n";
  for (const auto& f : failures) out << "failure: " << f << "\n";
  out << "result: " << (code == exit_code::kOk ? "PASS" : (code == exit_code::kBudget ? "INCOMPLETE" : "FAIL"))
      << "\n";
  return {code, out.str()};
}

// ---- sweeps ---------------------------------------------------------------

struct SweepRow {
  std::string graph;
  json record;
  std::string line;
  bool violated = false;
  std::vector<std::string> failures;
};

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Outcome cmd_conjecture(const Settings& s) {
  const auto opts = hstar_options(s);
  std::vector<SweepRow> rows;
  if (s.kind == "theta") {
    const int max_total = s.max_size > 0 ? s.max_size : 6;
    const auto triples = theta_triples(max_total);
    rows.resize(triples.size());
    parallel_for(triples.size(), s.threads, [&](std::size_t i) {
      const auto [k, l, m] = triples[i];
      const auto g = make_theta(k, l, m);
      TriangulationOptions t = tri_options(s);
      t.multicycle_order = false;
      const auto tri = triangulate(g, t);
      const auto vis = visibility_counts(g, tri.simplices).hstar;
      const auto formula = theta_hstar(k, l, m);
      const auto stat = statistic_polynomial(g, tri.simplices);
      auto& row = rows[i];
      row.graph = "theta(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
      row.violated = formula != vis;
      const bool stat_holds = stat == vis;
      row.record = {{"k", k}, {"l", l}, {"m", m}, {"hstar", poly_json(vis)}, {"formula", poly_json(formula)},
                    {"cells", tri.simplices.size()}, {"status", row.violated ? "VIOLATED" : "HOLDS"},
                    {"statistic", stat_holds ? "HOLDS" : "VIOLATED"}};
      row.line = row.graph + ": h* = " + vis.to_string() + " formula " + (row.violated ? "VIOLATED" : "HOLDS") +
                 ", statistic " + (stat_holds ? "HOLDS" : "VIOLATED");
    });
  } else {
    const int max_size = s.max_size > 0 ? s.max_size : 7;
    const auto graphs = connected_multigraphs(max_size);
    rows.resize(graphs.size());
    const bool statistic = s.kind == "statistic";
    parallel_for(graphs.size(), s.threads, [&](std::size_t i) {
      const auto& g = graphs[i];
      auto& row = rows[i];
      row.graph = canonical_form(g);
      if (statistic) {
        TriangulationOptions t = tri_options(s);
        t.multicycle_order = false;
        const auto tri = triangulate(g, t);
        const auto vis = visibility_counts(g, tri.simplices).hstar;
        const auto stat = statistic_polynomial(g, tri.simplices);
        row.violated = stat != vis;
        row.record = {{"graph", row.graph}, {"hstar", poly_json(vis)}, {"statistic", poly_json(stat)},
                      {"status", row.violated ? "VIOLATED" : "HOLDS"}};
        row.line = row.graph + ": h* = " + vis.to_string() + ", statistic " + stat.to_string() + " " +
                   (row.violated ? "VIOLATED" : "HOLDS");
      } else {
        const auto h = compute_hstar(g, parse_method(s.method), opts).hstar;
        const auto structure = check_structure_theorems(g, h);
        const auto upper = check_upper_bound_conjecture(g, h);
        row.violated = !upper.holds;
        row.failures = structure.failures;
        row.record = {{"graph", row.graph},           {"hstar", poly_json(h)},
                      {"bound", poly_json(upper.bound)}, {"status", upper.holds ? "HOLDS" : "VIOLATED"},
                      {"theorems", structure.ok()},   {"failures", structure.failures}};
        row.line = row.graph + ": h* = " + h.to_string() + " upper bound " + (upper.holds ? "HOLDS" : "VIOLATED") +
                   (structure.ok() ? "" : ", theorem check FAILED: " + join(structure.failures, "; "));
      }
    });
  }
  std::size_t violated = 0;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    violated += r.violated ? 1 : 0;
    failed += r.failures.empty() ? 0 : 1;
  }
  const int code = failed ? exit_code::kCheckFailed : exit_code::kOk;
  if (s.json) {
    json doc = base_doc(s);
    doc["kind"] = s.kind;
    json results = json::array();
    for (const auto& r : rows) results.push_back(r.record);
    doc["results"] = results;
    doc["summary"] = {{"graphs", rows.size()}, {"violated", violated}, {"theorem_failures", failed},
                      {"status", violated ? "VIOLATED" : "HOLDS"}};
    return {code, render(doc)};
  }
  std::ostringstream out;
  for (const auto& r : rows) out << r.line << "\n";
  out << "graphs: " << rows.size() << ", conjecture " << (violated ? "VIOLATED" : "HOLDS");
  if (violated) out << " on " << violated;
  out << "\n";
  if (failed) out << "theorem check failures: " << failed << "\n";
  return {code, out.str()};
}

// ---- dispatch --------------------------------------------------------------

std::string params_text(const Settings& s) {
  std::ostringstream p;
  p << "method=" << s.method << ";json=" << s.json << ";budget=" << s.budget << ";seed=" << s.order_seed
    << ";dot=" << s.dot << ";multicycle_order=" << s.multicycle_order;
  return p.str();
}

Outcome run_graph_command(const Settings& s) {
  const auto parsed = read_graph_file(s.file);
  const auto& g = parsed.graph;
  std::function<Outcome(const Settings&, const Multigraph&)> fn;
  if (s.command == "info") fn = cmd_info;
  else if (s.command == "lattice-points") fn = cmd_lattice_points;
  else if (s.command == "facets") fn = cmd_facets;
  else if (s.command == "triangulate") fn = cmd_triangulate;
  else if (s.command == "hstar") fn = cmd_hstar;
  else if (s.command == "volume") fn = cmd_volume;
  else if (s.command == "verify") fn = cmd_verify;
  else throw std::invalid_argument("unknown command '" + s.command + "'");
  if (s.command == "hstar" || s.command == "volume") parse_method(s.method);

  const auto dir = ResultCache::resolve_dir(s.cache_dir);
  if (!dir) return fn(s, g);
  const ResultCache cache(*dir);
  const std::string key = std::string(kSchema) + "\n" + write_graph(g) + "command=" + s.command + "\n" + params_text(s);
  if (auto hit = cache.lookup(key)) {
    const json rec = json::parse(*hit);
    return {exit_code::kOk, rec.at("output").get<std::string>()};
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome o = fn(s, g);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.code == exit_code::kOk) {
    const json rec = {{"graph_hash", canonical_hash(g)}, {"command", s.command}, {"params", params_text(s)},
                      {"output", o.text},               {"version", COSMOPOLY_VERSION}, {"wall_ms", ms}};
    cache.store(key, rec.dump());
  }
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Cosmological polytopes of multigraphs: lattice points, facets, triangulations and h*-polynomials."};
  app.name("cosmopoly");
  app.set_version_flag("--version", COSMOPOLY_VERSION);
  app.require_subcommand(1);
  app.add_option("--method", s.method, "h* route: auto, visibility, ehrhart, blocks")
      ->check(CLI::IsMember({"auto", "visibility", "ehrhart", "blocks"}));
  app.add_flag("--json", s.json, "machine-readable output");
  app.add_option("--budget-nodes", s.budget, "node cap for every search")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", s.cache_dir, "result cache directory (overrides COSMOPOLY_CACHE)");
  app.add_option("--order-seed", s.order_seed, "shuffle the term order within each variable class");
  app.add_option("--max-size", s.max_size, "sweep bound: |V|+|E| for graph sweeps, k+l+m for theta")
      ->check(CLI::Range(1, 12));
  app.add_option("--threads", s.threads, "worker threads")->check(CLI::Range(1, 256));

  const std::vector<std::pair<std::string, std::string>> graph_commands = {
      {"info", "graph summary"},
      {"lattice-points", "list the lattice points"},
      {"facets", "facet normals, one per connected subgraph"},
      {"triangulate", "cells of the Groebner triangulation"},
      {"hstar", "h*-polynomial"},
      {"volume", "normalized volume"},
      {"verify", "run every h* method and the theorem checks"},
  };
  for (const auto& [name, help] : graph_commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("graph", s.file, "graph file")->required();
    sub->callback([&s, n = name] { s.command = n; });
    if (name == "triangulate") {
      sub->add_flag("--dot", s.dot, "add a Graphviz drawing of each cell");
      sub->add_flag("--multicycle-order", s.multicycle_order, "use the multicycle ordering and check cell structure");
    }
  }
  auto* conj = app.add_subcommand("conjecture", "sweep a family and test a conjecture");
  conj->fallthrough();
  conj->add_option("kind", s.kind, "upper-bound, statistic or theta")
      ->required()
      ->check(CLI::IsMember({"upper-bound", "statistic", "theta"}));
  conj->callback([&s] { s.command = "conjecture"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    const Outcome o = s.command == "conjecture" ? cmd_conjecture(s) : run_graph_command(s);
    out << o.text;
    return o.code;
  } catch (const ParseError& e) {
    err << "error: " << s.file << ": " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const InvalidGraph& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget-nodes)\n";
    return exit_code::kBudget;
  } catch (const TheoremViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_code::kCheckFailed;
  } catch (const StructureViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_code::kCheckFailed;
  } catch (const ObstructionViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_code::kCheckFailed;
  } catch (const AnchorFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_code::kCheckFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInternal;
  }
}

}  // namespace cosmopoly
