#pragma once

// Possible Winner translations, clique-based hardness instances, and random
// instance generation.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "swapbribery/graph.hpp"
#include "swapbribery/swap.hpp"

namespace swapbribery {

// ---------------------------------------------------------------------------
// Partial votes

/// Strict partial order over candidates 0..m-1, stored transitively closed.
class PartialOrder {
 public:
  PartialOrder() = default;
  explicit PartialOrder(int m);
  /// Closure of the given "a before b" pairs. Throws DomainError on a cycle
  /// or an out-of-range candidate.
  PartialOrder(int m, const std::vector<std::pair<Candidate, Candidate>>& pairs);
  /// The complete order given by a ranking.
  static PartialOrder from_ranking(const Ranking& v);

  int size() const { return m_; }
  bool requires_before(Candidate a, Candidate b) const { return before_[a * m_ + b] != 0; }
  /// All closed pairs, lexicographically.
  std::vector<std::pair<Candidate, Candidate>> pairs() const;
  bool extended_by(const Ranking& v) const;
  /// Topological order picking the smallest available index each step.
  Ranking lexicographic_extension() const;
  /// Calls visit on every linear extension; stops early when visit returns
  /// false. Returns the number visited.
  long long for_each_extension(const std::function<bool(const Ranking&)>& visit) const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

 private:
  int m_ = 0;
  std::vector<char> before_;
};

struct PossibleWinnerInstance {
  std::vector<std::string> names;
  std::vector<PartialOrder> votes;
  VotingRule rule = VotingRule::approval(1);
  Candidate preferred = 0;
  WinnerMode mode = WinnerMode::co_winner;

  int candidate_count() const { return static_cast<int>(names.size()); }
  /// Throws DomainError on a roster/vote size mismatch or a bad rule.
  void validate() const;
};

/// Zero-budget instance with costs in {0, delta}: each expanded vote becomes
/// the closure of the pairs it orders at positive cost.
/// Throws PreconditionError for other costs or a non-zero budget.
PossibleWinnerInstance sb_to_pw(const BriberyInstance& instance);

/// Each partial vote is cast as its lexicographic extension; swapping a
/// pair the partial order fixes costs 1, every other swap costs 0; budget 0.
BriberyInstance pw_to_sb(const PossibleWinnerInstance& instance);

/// Exhaustive search over joint extensions. Extensions with the same effect
/// on the outcome are merged per vote; `cap` bounds both the extensions
/// listed per vote and the product of the merged counts (ResourceError).
bool possible_winner_brute(const PossibleWinnerInstance& instance, double cap = 1e6);

/// Random permutation, then each of its ordered pairs kept with probability
/// `density`, then closed.
PartialOrder random_partial_order(int m, double density, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Multicolored-clique construction (2-approval, costs 1 and 1+epsilon)

enum class GadgetRole {
  preferred,
  sink,         // r
  a,            // a^{i,j}
  b,
  c,
  c_tilde,
  f,
  h,
  h_tilde,
  m,            // m^{i,j}, i <= j
  m_tilde,      // i < j
  transporter,
  guard,
  dummy,
};

struct CliqueGadgetInstance {
  BriberyInstance instance;
  int k = 0;
  /// Common target score.
  long long K = 0;
  Rational epsilon;
  std::vector<GadgetRole> roles;
  /// Chains q1 -> q2; one entry per chain copy, each listing its vote lines
  /// from q1's end to q2's end.
  std::map<std::pair<Candidate, Candidate>, std::vector<std::vector<int>>> chains;
  /// Selection vote lines keyed by (i, x), 2 <= i <= k, classes 1-based.
  std::map<std::pair<int, int>, int> selection_votes;
  /// Incidence vote lines keyed by (i, j, y, x): i < j, y in V_i, x in V_j.
  std::map<std::tuple<int, int, int, int>, int> incidence_votes;
};

/// Builds the instance for a graph whose classes 0..k-1 stand for V_1..V_k.
/// Candidate names use 1-based classes and 0-based vertex ids, e.g.
/// "a_1_2", "b_7_1", "ct_7_2" (c-tilde), "ht_3_2" (h-tilde), "mt_1_2".
/// Throws DomainError when k < 2, a vertex is uncolored, a class is not
/// independent, or epsilon <= 0. Runs clique_gadget_audit and throws
/// std::logic_error if it reports anything.
CliqueGadgetInstance build_clique_gadget(const ColoredGraph& graph, const Rational& epsilon = 1);

/// Violations of the intended initial scores: r has 0, every a^{i,j} has
/// K+1, dummies have at most 1, every other candidate has exactly K.
std::vector<std::string> clique_gadget_audit(const CliqueGadgetInstance& gadget);

/// The bribery selecting clique[i] in class i (0-based): the chain transfers
/// and gadget rearrangements along the chosen vertices. Its cost is
/// k^3 + 10k^2. Throws DomainError if the vertices are not a multicolored
/// clique.
Bribery clique_witness_bribery(const ColoredGraph& graph, const std::vector<int>& clique,
                               const CliqueGadgetInstance& gadget);

// ---------------------------------------------------------------------------
// Single-vote clique construction ((k+1)-approval)

/// One vote d_1 .. d_{k+1} c_1 .. c_N p. Swapping two adjacent c's costs 1,
/// d_1 with c_i costs N minus the number of earlier neighbours of c_i, any c
/// with p costs N^2, everything else 0. Budget (N-k)N^2 + kN - k(k-1)/2.
/// Throws DomainError unless 1 <= k <= N.
BriberyInstance build_single_vote_clique(const ColoredGraph& graph, int k);

// ---------------------------------------------------------------------------
// Random instances

enum class CostModelKind { unit, two_valued, uniform_range };

struct CostModel {
  CostModelKind kind = CostModelKind::unit;
  /// two_valued: cost `high` with probability `density`, else `low`.
  Rational low = 1;
  Rational high = 2;
  double density = 0.5;
  /// uniform_range: integers in [lo, hi].
  long long lo = 1;
  long long hi = 1;

  static CostModel unit() { return {}; }
  static CostModel two_valued(Rational low, Rational high, double density);
  static CostModel uniform_range(long long lo, long long hi);
};

struct RandomSpec {
  int m = 3;
  int n = 2;
  int k = 1;
  CostModel costs;
  Rational budget = 1;
  WinnerMode mode = WinnerMode::co_winner;
  std::uint64_t seed = 1;
};

/// k-approval over candidates "p", "c1", ..., with p preferred, uniformly
/// random votes, and one cost per unordered pair and vote line (symmetric).
/// Throws DomainError on bad sizes or cost bounds.
BriberyInstance generate_random(const RandomSpec& spec);

}  // namespace swapbribery
