#pragma once

#include <optional>

#include "swapbribery/rational.hpp"
#include "swapbribery/swap.hpp"

namespace swapbribery {

/// Outcome of a decision solver. `cost` is the exact optimum for the
/// optimizing solvers and the witness cost for the others.
struct SolveResult {
  bool decision = false;
  std::optional<Rational> cost;
  std::optional<Bribery> witness;
};

}  // namespace swapbribery
