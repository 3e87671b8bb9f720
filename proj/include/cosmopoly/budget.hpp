#pragma once

#include <atomic>
#include <cstdint>
#include <string>

namespace cosmopoly {

inline constexpr std::uint64_t kDefaultMaxNodes = 50'000'000;

/// Node counter shared by the workers of one search. Charging past the cap
/// throws BudgetExceeded naming the search that ran out.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t max_nodes = kDefaultMaxNodes, std::string what = "search")
      : max_nodes_(max_nodes), what_(std::move(what)) {}

  NodeBudget(const NodeBudget&) = delete;
  NodeBudget& operator=(const NodeBudget&) = delete;

  void charge(std::uint64_t nodes = 1) {
    const auto total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > max_nodes_) fail();
  }

  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t max_nodes() const noexcept { return max_nodes_; }

 private:
  [[noreturn]] void fail() const;

  std::uint64_t max_nodes_;
  std::string what_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace cosmopoly
