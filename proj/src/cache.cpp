#include "cosmopoly/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <json.hpp>

#include "cosmopoly/error.hpp"
#include "cosmopoly/graph_io.hpp"

namespace cosmopoly {

namespace fs = std::filesystem;
using nlohmann::json;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw Error("cannot create cache directory '" + dir_.string() + "'");
}

std::optional<fs::path> ResultCache::resolve_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return fs::path(flag_value);
  if (const char* env = std::getenv("COSMOPOLY_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / (fnv1a_hex(key) + ".json"); }

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    if (doc.at("key").get<std::string>() != key) return std::nullopt;
    return doc.at("record").dump();
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const std::string& record) const {
  static std::atomic<unsigned> counter{0};
  const json doc = {{"key", key}, {"record", json::parse(record)}};
  const fs::path target = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
           << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file '" + tmp.string() + "'");
    out << doc.dump(2) << "\n";
    if (!out) throw Error("cannot write cache file '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot move cache file into '" + target.string() + "'");
  }
}

}  // namespace cosmopoly
