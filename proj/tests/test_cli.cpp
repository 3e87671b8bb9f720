#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cosmopoly/cli.hpp"

using namespace cosmopoly;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cosmopoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cosmopoly_cli_" + std::to_string(std::rand()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

std::size_t file_count(const fs::path& dir) {
  std::size_t n = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++n;
  return n;
}

}  // namespace

TEST_CASE("hstar of an edge") {
  TempDir t;
  const auto edge = t.file("edge.txt", "0 1\n");
  const auto r = run({"hstar", edge});
  CHECK(r.code == exit_code::kOk);
  CHECK(r.out == "h* = 1 + 3z\n");
  CHECK(run({"volume", edge}).out == "volume = 4\n");
  CHECK(run({"--method", "ehrhart", "hstar", edge}).out == "h* = 1 + 3z\n");
}

TEST_CASE("verify passes on a triangle") {
  TempDir t;
  const auto r = run({"verify", t.file("tri.txt", "0 1\n1 2\n2 0\n")});
  CHECK(r.code == exit_code::kOk);
  CHECK(r.out.find("agreement: ok") != std::string::npos);
  CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("triangulate with the multicycle order") {
  TempDir t;
  const auto r = run({"triangulate", "--multicycle-order", t.file("c.txt", "0 1 *2\n1 2\n2 0\n")});
  CHECK(r.code == exit_code::kOk);
  CHECK(r.out.find("cells: 160") != std::string::npos);
  CHECK(r.out.find("structure: ok") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir t;
  const auto tri = t.file("tri.txt", "0 1\n1 2\n2 0\n");
  CHECK(run({"--budget-nodes", "3", "--method", "visibility", "hstar", tri}).code == exit_code::kBudget);
  CHECK(run({"hstar", t.file("bad.txt", "0 1\n2\n")}).code == exit_code::kUsage);
  CHECK(run({"hstar", (t.path / "missing.txt").string()}).code == exit_code::kUsage);
  CHECK(run({"frobnicate"}).code == exit_code::kUsage);
  CHECK(run({"--method", "magic", "hstar", tri}).code == exit_code::kUsage);
  CHECK(run({"--method", "ehrhart", "hstar", t.file("two.txt", "0 1\n2 3\n")}).code == exit_code::kUsage);
  CHECK(run({"--version"}).code == exit_code::kOk);
}

TEST_CASE("json output is stable") {
  TempDir t;
  const auto tri = t.file("tri.txt", "0 1\n1 2\n2 0\n");
  const auto a = run({"--json", "hstar", tri});
  const auto b = run({"--json", "hstar", tri});
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["schema"] == "cosmopoly/1");
  CHECK(doc["hstar"] == nlohmann::json::array({1, 9, 27, 19}));
}

TEST_CASE("cache directory from flag and environment") {
  TempDir t;
  const auto tri = t.file("tri.txt", "0 1\n1 2\n2 0\n");
  const auto flag_dir = t.path / "flag_cache";
  const auto first = run({"--cache-dir", flag_dir.string(), "hstar", tri});
  CHECK(first.code == exit_code::kOk);
  CHECK(file_count(flag_dir) == 1);
  const auto second = run({"--cache-dir", flag_dir.string(), "hstar", tri});
  CHECK(second.out == first.out);
  CHECK(file_count(flag_dir) == 1);
  // A tampered record is served, which shows the hit path is taken.
  for (const auto& e : fs::directory_iterator(flag_dir)) {
    std::ifstream in(e.path());
    auto rec = nlohmann::json::parse(in);
    rec["record"]["output"] = "h* = cached\n";
    std::ofstream(e.path()) << rec.dump();
  }
  CHECK(run({"--cache-dir", flag_dir.string(), "hstar", tri}).out == "h* = cached\n");

  const auto env_dir = t.path / "env_cache";
  ::setenv("COSMOPOLY_CACHE", env_dir.string().c_str(), 1);
  CHECK(run({"hstar", tri}).out == "h* = 1 + 9z + 27z^2 + 19z^3\n");
  CHECK(file_count(env_dir) == 1);
  // The flag wins over the environment.
  CHECK(run({"--cache-dir", flag_dir.string(), "hstar", tri}).out == "h* = cached\n");
  ::setenv("COSMOPOLY_CACHE", "", 1);
}

TEST_CASE("conjecture sweeps") {
  const auto theta = run({"--max-size", "4", "conjecture", "theta"});
  CHECK(theta.code == exit_code::kOk);
  CHECK(theta.out.find("graphs: 2, conjecture HOLDS") != std::string::npos);
  const auto upper = run({"--max-size", "4", "conjecture", "upper-bound"});
  CHECK(upper.code == exit_code::kOk);
  CHECK(upper.out.find("graphs: 6, conjecture HOLDS") != std::string::npos);
  const auto stat = run({"--max-size", "4", "conjecture", "statistic"});
  CHECK(stat.code == exit_code::kOk);
  CHECK(stat.out.find("conjecture HOLDS") != std::string::npos);
  CHECK(run({"conjecture", "nonsense"}).code == exit_code::kUsage);
}
