#pragma once

// Color-coding search for k-approval, parameterized by (n, k).
//
// A vote pattern is a k-subset of colors 1..nk; an election pattern assigns
// one to every expanded vote. p always carries color 1. Given a pattern and
// a coloring, each vote independently takes the cheapest top set whose
// colors are exactly its pattern.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "swapbribery/result.hpp"
#include "swapbribery/swap.hpp"

namespace swapbribery {

/// Sorted colors in 1..nk.
using VotePattern = std::vector<int>;
using ElectionPattern = std::vector<VotePattern>;
/// Color of every candidate; the preferred candidate has color 1.
using Coloring = std::vector<int>;

/// Color 1 occurs at least as often as any other color (strictly more often
/// in unique-winner mode).
bool is_successful(const ElectionPattern& pattern, WinnerMode mode = WinnerMode::co_winner);

/// C(nk, k)^n, the number of election patterns before filtering.
double candidate_pattern_count(int n, int k);

/// Calls `visit` on every successful pattern once, in lexicographic order.
/// Stops early when `visit` returns false. Returns the number visited.
/// Throws ResourceError when n*k exceeds `cap`.
long long for_each_successful_pattern(int n, int k, WinnerMode mode,
                                      const std::function<bool(const ElectionPattern&)>& visit, int cap = 12);

/// Per vote, the cheapest top-k set whose colors are exactly P_i (so the
/// coloring is injective on it), moved to the top. nullopt if some vote has
/// no such set.
std::optional<Bribery> cheapest_for_pattern(const BriberyInstance& instance, const ElectionPattern& pattern,
                                            const Coloring& coloring);

enum class ColorMode { random, exhaustive };

struct ColorOptions {
  ColorMode mode = ColorMode::exhaustive;
  /// Random colorings per pattern; 0 means (nk-1)^(nk-1).
  long long trials = 0;
  std::uint64_t seed = 1;
  int pattern_cap = 12;
  /// Bound on |A|^(m-1) colorings per pattern in exhaustive mode.
  double coloring_cap = 1e6;
  /// Exhaustive mode only: keep searching for the cheapest bribery instead
  /// of stopping at the first one within budget.
  bool optimize = false;
};

/// Returns a verified solution or decision = no. Exhaustive mode is
/// complete; random mode may miss solutions. `cost` is the witness cost
/// (the optimum when `optimize` is set).
SolveResult solve_colorcoding(const BriberyInstance& instance, const ColorOptions& options = {});

/// (nk-1)^(nk-1), at least 1, saturating at the long long range.
long long default_trials(int n, int k);

}  // namespace swapbribery
