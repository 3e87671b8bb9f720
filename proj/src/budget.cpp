#include "cosmopoly/budget.hpp"

#include "cosmopoly/error.hpp"

namespace cosmopoly {

void NodeBudget::fail() const {
  throw BudgetExceeded(what_ + " exceeded the node budget of " + std::to_string(max_nodes_));
}

}  // namespace cosmopoly
