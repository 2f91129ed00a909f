#pragma once

// Polynomial kernels for k-approval Swap Bribery with every swap costing at
// least 1, parameterized by the number of votes n and the budget.

#include <optional>
#include <vector>

#include "swapbribery/swap.hpp"

namespace swapbribery {

/// Candidates at a position in [k - b + 1, k + b] of some vote (clamped to
/// [1, m]), with b = floor(budget). Only they can gain or lose points.
std::vector<Candidate> relevant_candidates(const Election& election, int k, long long b);
/// Same, for an instance; throws PreconditionError if some cost is below 1.
std::vector<Candidate> relevant_candidates(const BriberyInstance& instance);

struct KernelOutput {
  /// Rule (b+1)-approval, same budget and mode. Swaps involving a dummy or
  /// an appended tail candidate cost b+1, so they never fit the budget.
  BriberyInstance instance;
  /// Original indices of the relevant candidates.
  std::vector<Candidate> relevant;
  /// Original index of the strongest candidate outside the relevant set and
  /// p, if one exists.
  std::optional<Candidate> sentinel;
  /// Kernel indices of the dummies.
  std::vector<Candidate> dummies;
  /// Original index of each kernel candidate, nullopt for dummies.
  std::vector<std::optional<Candidate>> provenance;
  /// Number of truncated votes; the remaining kernel votes pad scores.
  int truncated_votes = 0;
};

/// Throws PreconditionError unless the rule is k-approval, every cost is at
/// least 1 and the mode is co-winner. Asserts the size bounds
/// |V_K| <= (2nb+3)n and |C_K| <= n + (2nb+2)(2nb+1).
KernelOutput kernelize(const BriberyInstance& instance);

/// Deletes every candidate ranked below k + b in all votes, except p. Same
/// rule, budget and mode; at most (k+b)n + 1 candidates.
BriberyInstance simple_truncation_kernel(const BriberyInstance& instance);

}  // namespace swapbribery
