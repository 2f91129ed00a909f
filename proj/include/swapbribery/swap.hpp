#pragma once

// Swap costs, bribery instances, and the exact cost of transforming votes.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "swapbribery/election.hpp"
#include "swapbribery/rational.hpp"

namespace swapbribery {

/// Cost table of a single vote line. cost(a, b) is charged for swapping a
/// while a directly precedes b.
class VoteCosts {
 public:
  VoteCosts() = default;
  explicit VoteCosts(std::optional<Rational> default_cost) : default_(std::move(default_cost)) {}

  /// Override for the ordered pair (a, b). Throws DomainError on negative cost.
  void set(Candidate a, Candidate b, const Rational& cost);
  /// Sets both (a, b) and (b, a).
  void set_symmetric(Candidate a, Candidate b, const Rational& cost);
  void set_default(std::optional<Rational> cost);

  const std::optional<Rational>& default_cost() const { return default_; }
  const std::map<std::pair<Candidate, Candidate>, Rational>& overrides() const { return overrides_; }

  /// Resolved cost, falling back to this line's default and then `fallback`.
  const Rational& cost(Candidate a, Candidate b, const Rational& fallback) const;

  friend bool operator==(const VoteCosts&, const VoteCosts&) = default;

 private:
  std::optional<Rational> default_;
  std::map<std::pair<Candidate, Candidate>, Rational> overrides_;
};

/// Swap prices for every vote line, with a global default for unspecified
/// pairs. Copies of a multiplicity-w line share that line's table.
class SwapCostFunction {
 public:
  SwapCostFunction() = default;
  /// Unit costs everywhere unless `global_default` says otherwise.
  explicit SwapCostFunction(int lines, Rational global_default = 1);

  int line_count() const { return static_cast<int>(tables_.size()); }
  const Rational& global_default() const { return global_default_; }
  VoteCosts& line(int i) { return tables_.at(i); }
  const VoteCosts& line(int i) const { return tables_.at(i); }

  const Rational& cost(int line, Candidate a, Candidate b) const {
    return tables_[line].cost(a, b, global_default_);
  }

  friend bool operator==(const SwapCostFunction&, const SwapCostFunction&) = default;

 private:
  Rational global_default_ = 1;
  std::vector<VoteCosts> tables_;
};

/// Read-only view of the cost table that applies to one expanded vote.
class PairCosts {
 public:
  PairCosts(const VoteCosts& table, const Rational& fallback) : table_(&table), fallback_(&fallback) {}
  const Rational& operator()(Candidate a, Candidate b) const { return table_->cost(a, b, *fallback_); }

 private:
  const VoteCosts* table_;
  const Rational* fallback_;
};

/// A single adjacent exchange (vote, first, second); `first` must directly
/// precede `second` when the swap is applied.
struct Swap {
  int vote = 0;
  Candidate first = 0;
  Candidate second = 0;
  friend auto operator<=>(const Swap&, const Swap&) = default;
};

/// Per expanded vote, the ranking after bribery.
struct Bribery {
  std::vector<Ranking> targets;
};

struct BriberyInstance {
  Election election;
  VotingRule rule = VotingRule::approval(1);
  Candidate preferred = 0;
  SwapCostFunction costs;
  Rational budget = 0;
  WinnerMode mode = WinnerMode::co_winner;

  /// Throws DomainError when the pieces do not fit together.
  void validate() const;

  int candidate_count() const { return election.candidate_count(); }
  int vote_count() const { return election.vote_count(); }
  PairCosts costs_of(int expanded_index) const {
    return PairCosts(costs.line(election.line_of(expanded_index)), costs.global_default());
  }
  /// Bribery that leaves every vote unchanged.
  Bribery identity_bribery() const { return {election.expanded()}; }
};

/// Applies a set of swaps of one vote. Throws AdmissibilityError when no
/// sequential order realizes the whole set.
Ranking apply_swaps(const Ranking& v, std::span<const Swap> swaps);

/// Adjacent swaps turning v into target, each inverted pair exactly once.
std::vector<Swap> bubble_swaps(const Ranking& v, const Ranking& target, int vote = 0);

/// Minimum total cost of turning v into target: the sum, over pairs inverted
/// between the two, of cost(earlier in v, later in v).
Rational transform_cost(const Ranking& v, const Ranking& target, const PairCosts& costs);

/// Number of discordant pairs between two rankings.
long long kendall_tau(const Ranking& a, const Ranking& b);

/// Cheapest cost of any ranking whose first k positions hold exactly `chosen`.
/// Throws DomainError unless chosen has k distinct in-range candidates.
Rational move_to_top_cost(const Ranking& v, std::span<const Candidate> chosen, int k, const PairCosts& costs);

/// The cheapest ranking with `chosen` in front: chosen candidates keep their
/// relative order, followed by the rest in their relative order.
Ranking move_to_top(const Ranking& v, std::span<const Candidate> chosen);

/// All pair costs of one expanded vote equal `value`?
bool all_costs_equal(const BriberyInstance& instance, const Rational& value);
/// Smallest and largest ordered-pair cost over all expanded votes.
std::pair<Rational, Rational> cost_range(const BriberyInstance& instance);

struct BriberyReport {
  Rational cost;
  bool preferred_wins = false;
  bool within_budget = false;
  bool is_solution() const { return preferred_wins && within_budget; }
};

/// Prices a bribery and evaluates the bribed election under the instance rule.
BriberyReport verify_bribery(const BriberyInstance& instance, const Bribery& bribery);

}  // namespace swapbribery
