#pragma once

// Swap Bribery as integer feasibility over counts of vote transformations,
// for rules described by systems of linear inequalities over the number of
// votes cast as each of the m! rankings.

#include <string>
#include <vector>

#include "swapbribery/ilp.hpp"
#include "swapbribery/result.hpp"
#include "swapbribery/swap.hpp"

namespace swapbribery {

/// Inequality over x_1..x_{m!}: sum coeff[i] * x_i (relation) rhs.
struct ProfileInequality {
  std::vector<Rational> coeff;
  Relation relation = Relation::ge;
  Rational rhs;
};

/// Candidate labels are 0..m-1 with label 0 playing the preferred
/// candidate. The rule elects label 0 iff the profile x satisfies every
/// inequality of at least one set.
struct RuleDescription {
  int m = 0;
  int n = 0;
  /// All m! rankings of the labels, in lexicographic order.
  std::vector<std::vector<Candidate>> rankings;
  std::vector<std::vector<ProfileInequality>> sets;
};

/// k-approval and scoring vectors: one set of m-1 dominance inequalities.
/// Bucklin: one set per round b with m "no majority before round b" rows,
/// a majority row for label 0 and m-1 dominance rows. Unique-winner mode
/// adds 1 to every dominance right-hand side. Throws ResourceError when m!
/// exceeds `ranking_cap`, DomainError when m < 2.
RuleDescription describe_rule(const VotingRule& rule, int m, int n, WinnerMode mode = WinnerMode::co_winner,
                              int ranking_cap = 720);

/// Whether the profile satisfies some set of the description.
bool description_elects(const RuleDescription& d, const std::vector<long long>& profile);

struct VoteGroup {
  /// Index of the group's ranking within RuleDescription::rankings.
  int base = 0;
  /// Vote line whose cost table applies.
  int line = 0;
  /// Expanded vote indices in the group, ascending.
  std::vector<int> members;
};

struct TransformationIlp {
  IntegerProgram program;
  std::vector<VoteGroup> groups;
  /// Per variable: (group, target ranking index).
  std::vector<std::pair<int, int>> variables;
  /// Original candidate of each label.
  std::vector<Candidate> label_to_candidate;
  int set_index = 0;
};

/// Groups votes by (ranking, cost table), or one group per expanded vote
/// when `per_vote` is set. Constraints: per group at most n_g votes leave;
/// the total transformation cost is within budget; the chosen inequality
/// set holds for the transformed profile.
TransformationIlp build_ilp(const BriberyInstance& instance, const RuleDescription& description, int set_index,
                            bool per_vote = false);

/// The bribery moving, per group, t_{g,j} of its votes (lowest expanded
/// indices first) to ranking j.
Bribery bribery_from_assignment(const BriberyInstance& instance, const RuleDescription& description,
                                const TransformationIlp& ilp, const std::vector<long long>& values);

struct RuleIlpOptions {
  IlpOptions ilp;
  int ranking_cap = 720;
  bool per_vote = false;
};

/// Tries every inequality set; a feasible one yields a verified witness.
/// `cost` is the witness cost. Works for k-approval, scoring vectors and
/// Bucklin.
SolveResult solve_ilp(const BriberyInstance& instance, const RuleIlpOptions& options = {});

/// LP-format dump of one set's program.
std::string ilp_listing(const BriberyInstance& instance, const TransformationIlp& ilp,
                        const RuleDescription& description);

}  // namespace swapbribery
