#pragma once

// Unit-cost Swap Bribery for k-approval via min-cost flow, and the
// approximation it yields when costs lie in [1, delta].

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swapbribery/flow.hpp"
#include "swapbribery/result.hpp"
#include "swapbribery/swap.hpp"

namespace swapbribery {

/// Network deciding whether some bribery lets p finish with exactly
/// `target_score` points while nobody else exceeds it.
///
/// Layers: source -> one node per (vote, one-position candidate) -> one node
/// per (vote, candidate) -> one node per candidate -> junction or sink.
/// Keeping a point costs 0; handing the point of c to a zero-position
/// candidate c' costs rank(c', v) - rank(c, v).
struct ScoreNetwork {
  FlowNetwork network;
  int vote_count = 0;
  int candidate_count = 0;
  int k = 0;
  int target_score = 0;

  /// top_node[v][c]: node of c's one-position in vote v, or -1.
  std::vector<std::vector<int>> top_node;
  /// slot_node[v][c]: node receiving c's point in vote v.
  std::vector<std::vector<int>> slot_node;
  std::vector<int> candidate_node;
  int junction = -1;

  /// Arcs moving a point from a one-position candidate to a zero-position one.
  struct Transfer {
    int arc;
    int vote;
    Candidate from;
    Candidate to;
  };
  std::vector<Transfer> transfers;
  /// Arc indices of the "keep" arcs, the candidate->junction arcs, the
  /// preferred->sink arc and the junction->sink arc.
  std::vector<int> keep_arcs;
  std::vector<int> cap_arcs;
  int preferred_arc = -1;
  int junction_arc = -1;
};

/// Throws DomainError unless 1 <= target_score <= votes.size() and 1 <= k <= m.
/// In unique-winner mode the rivals' arcs get capacity target_score - 1.
/// Node labels use `names` when given, candidate indices otherwise.
ScoreNetwork build_score_network(std::span<const Ranking> votes, int m, int k, Candidate preferred,
                                 int target_score, WinnerMode mode = WinnerMode::co_winner,
                                 std::span<const std::string> names = {});

/// Per vote, the ranking described by an integral flow: unchanged
/// one-position candidates first, then the candidates receiving a point, then
/// the candidates giving one away, then the remaining zero-position
/// candidates, each group in its original relative order.
Bribery extract_bribery(const ScoreNetwork& net, std::span<const Ranking> votes, const std::vector<long long>& flow);

/// Exact optimum for k-approval when every swap costs 1. `cost` is the
/// optimal cost (regardless of budget) when p can win at all.
/// Throws PreconditionError if some pair cost differs from 1.
SolveResult solve_uniform(const BriberyInstance& instance);

struct ApproxResult {
  std::optional<Bribery> witness;
  /// Witness cost under the true costs.
  Rational cost;
  /// Witness cost when every swap is priced 1.
  Rational unit_cost;
  Rational delta;
  bool within_budget = false;
};

/// Solves as if all costs were 1 and reprices the result. With every cost in
/// [1, delta] the returned cost is at most delta times the true optimum.
/// `delta` defaults to the largest cost in the instance. Throws
/// PreconditionError when some cost lies outside [1, delta].
ApproxResult approx_delta(const BriberyInstance& instance, std::optional<Rational> delta = std::nullopt);

}  // namespace swapbribery
