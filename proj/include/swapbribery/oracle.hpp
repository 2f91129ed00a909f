#pragma once

// Exhaustive reference solvers. Obviously correct, exponential, desk scale.

#include <functional>
#include <optional>
#include <vector>

#include "swapbribery/result.hpp"
#include "swapbribery/swap.hpp"

namespace swapbribery {

struct OracleOptions {
  /// Without budget pruning: bound on the size of the full search space,
  /// checked before searching. With pruning: bound on visited leaves.
  double cap = 1e7;
  /// Skip every per-vote choice whose cost alone exceeds the budget. The
  /// reported optimum is then only known when it is within budget.
  bool prune_at_budget = false;
};

/// A per-vote choice considered by the oracles, with its cheapest cost.
struct PricedSubset {
  std::vector<Candidate> members;
  Rational cost;
};

/// Every k-subset of candidates with its move-to-top cost in v, optionally
/// only those costing at most `limit`. Sorted by cost, ties in lexicographic
/// order of positions in v.
std::vector<PricedSubset> priced_top_sets(const Ranking& v, int k, const PairCosts& costs,
                                          const std::optional<Rational>& limit = std::nullopt);

/// Enumerates one k-subset per expanded vote as the vote's one-positions.
/// Requires k-approval. `cost` is the exact minimum over all winning
/// profiles (unless pruned out), decision = cost <= budget.
SolveResult brute_topk(const BriberyInstance& instance, const OracleOptions& options = {});

/// Enumerates every target ranking per expanded vote; works for every rule.
SolveResult brute_rankings(const BriberyInstance& instance, const OracleOptions& options = {.cap = 1e6});

}  // namespace swapbribery
