#include "swapbribery/rule_ilp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "swapbribery/errors.hpp"

namespace swapbribery {

namespace {

/// Lexicographic index of a permutation of 0..m-1 (Lehmer code).
int permutation_index(const std::vector<Candidate>& perm) {
  const int m = static_cast<int>(perm.size());
  int index = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j) smaller += perm[j] < perm[i];
    index = index * (m - i) + smaller;
  }
  return index;
}

ProfileInequality dominance(const RuleDescription& d, const std::vector<std::vector<long long>>& points, int j,
                            WinnerMode mode) {
  ProfileInequality row;
  for (std::size_t i = 0; i < d.rankings.size(); ++i) row.coeff.push_back(to_rational(points[i][0] - points[i][j]));
  row.relation = Relation::ge;
  row.rhs = mode == WinnerMode::unique ? 1 : 0;
  return row;
}

/// points[i][c] = 1 if label c is among the first b of ranking i.
std::vector<std::vector<long long>> top_b(const RuleDescription& d, int b) {
  std::vector<std::vector<long long>> points(d.rankings.size(), std::vector<long long>(d.m, 0));
  for (std::size_t i = 0; i < d.rankings.size(); ++i)
    for (int pos = 0; pos < b; ++pos) points[i][d.rankings[i][pos]] = 1;
  return points;
}

}  // namespace

RuleDescription describe_rule(const VotingRule& rule, int m, int n, WinnerMode mode, int ranking_cap) {
  if (m < 2) throw DomainError("rule descriptions need at least two candidates");
  if (n < 1) throw DomainError("rule descriptions need at least one vote");
  rule.validate(m);
  long long count = 1;
  for (int i = 2; i <= m; ++i) {
    count *= i;
    if (count > ranking_cap) throw ResourceError(std::to_string(m) + "! rankings exceed the cap " + std::to_string(ranking_cap));
  }

  RuleDescription d;
  d.m = m;
  d.n = n;
  std::vector<Candidate> perm(m);
  for (int c = 0; c < m; ++c) perm[c] = c;
  do d.rankings.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  if (!rule.is_bucklin()) {
    std::vector<std::vector<long long>> points(d.rankings.size(), std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < d.rankings.size(); ++i)
      for (int pos = 0; pos < m; ++pos) points[i][d.rankings[i][pos]] = rule.points(pos, m);
    std::vector<ProfileInequality> set;
    for (int j = 1; j < m; ++j) set.push_back(dominance(d, points, j, mode));
    d.sets.push_back(std::move(set));
    return d;
  }

  const long long majority = n / 2 + 1;
  for (int b = 1; b <= m; ++b) {
    std::vector<ProfileInequality> set;
    auto before = top_b(d, b - 1);
    for (int j = 0; j < m; ++j) {
      ProfileInequality row;
      for (std::size_t i = 0; i < d.rankings.size(); ++i) row.coeff.push_back(to_rational(before[i][j]));
      row.relation = Relation::le;
      row.rhs = to_rational(majority - 1);
      set.push_back(std::move(row));
    }
    auto now = top_b(d, b);
    ProfileInequality reach;
    for (std::size_t i = 0; i < d.rankings.size(); ++i) reach.coeff.push_back(to_rational(now[i][0]));
    reach.relation = Relation::ge;
    reach.rhs = to_rational(majority);
    set.push_back(std::move(reach));
    for (int j = 1; j < m; ++j) set.push_back(dominance(d, now, j, mode));
    d.sets.push_back(std::move(set));
  }
  return d;
}

bool description_elects(const RuleDescription& d, const std::vector<long long>& profile) {
  if (profile.size() != d.rankings.size()) throw DomainError("profile length must be m!");
  for (const auto& set : d.sets) {
    bool ok = true;
    for (const auto& row : set) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < profile.size(); ++i)
        if (profile[i] != 0) lhs += row.coeff[i] * to_rational(profile[i]);
      bool holds = row.relation == Relation::le ? lhs <= row.rhs : row.relation == Relation::ge ? lhs >= row.rhs : lhs == row.rhs;
      if (!holds) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

TransformationIlp build_ilp(const BriberyInstance& instance, const RuleDescription& description, int set_index,
                            bool per_vote) {
  instance.validate();
  const Election& e = instance.election;
  const int m = e.candidate_count();
  if (description.m != m) throw DomainError("description does not match the candidate count");
  if (set_index < 0 || set_index >= static_cast<int>(description.sets.size())) throw DomainError("set index out of range");

  TransformationIlp out;
  out.set_index = set_index;
  std::vector<Candidate> to_label(m);
  out.label_to_candidate.push_back(instance.preferred);
  for (Candidate c = 0; c < m; ++c)
    if (c != instance.preferred) out.label_to_candidate.push_back(c);
  for (int l = 0; l < m; ++l) to_label[out.label_to_candidate[l]] = l;

  auto base_of = [&](const Ranking& r) {
    std::vector<Candidate> labels;
    for (Candidate c : r) labels.push_back(to_label[c]);
    return permutation_index(labels);
  };

  for (int line = 0; line < e.line_count(); ++line) {
    const Vote& vote = e.vote(line);
    int base = base_of(vote.ranking);
    VoteGroup* group = nullptr;
    if (!per_vote)
      for (auto& g : out.groups)
        if (g.base == base && instance.costs.line(g.line) == instance.costs.line(line)) group = &g;
    int offset = e.expanded_offset(line);
    for (int copy = 0; copy < vote.multiplicity; ++copy) {
      if (!group || per_vote) {
        out.groups.push_back({base, line, {}});
        group = &out.groups.back();
      }
      group->members.push_back(offset + copy);
    }
  }
  for (auto& g : out.groups) std::sort(g.members.begin(), g.members.end());

  const int rankings = static_cast<int>(description.rankings.size());
  auto target_ranking = [&](int j) {
    std::vector<Candidate> order;
    for (Candidate l : description.rankings[j]) order.push_back(out.label_to_candidate[l]);
    return Ranking(std::move(order));
  };
  std::vector<Ranking> targets;
  for (int j = 0; j < rankings; ++j) targets.push_back(target_ranking(j));

  IntegerProgram& prog = out.program;
  std::vector<std::vector<int>> var_of(out.groups.size(), std::vector<int>(rankings, -1));
  std::vector<Rational> var_cost;
  for (std::size_t g = 0; g < out.groups.size(); ++g) {
    const auto& group = out.groups[g];
    const long long size = static_cast<long long>(group.members.size());
    const Ranking& base = e.vote(group.line).ranking;
    auto costs = instance.costs_of(group.members.front());
    for (int j = 0; j < rankings; ++j) {
      if (j == group.base) continue;
      int v = prog.add_variable("t_" + std::to_string(g + 1) + "_" + std::to_string(j + 1), 0, size);
      var_of[g][j] = v;
      out.variables.push_back({static_cast<int>(g), j});
      var_cost.push_back(transform_cost(base, targets[j], costs));
    }
  }

  for (std::size_t g = 0; g < out.groups.size(); ++g) {
    LinearConstraint leave;
    for (int j = 0; j < rankings; ++j)
      if (var_of[g][j] >= 0) leave.terms.push_back({var_of[g][j], 1});
    leave.relation = Relation::le;
    leave.rhs = to_rational(static_cast<long long>(out.groups[g].members.size()));
    leave.label = "leave_" + std::to_string(g + 1);
    prog.add_constraint(std::move(leave));
  }

  LinearConstraint budget;
  for (int v = 0; v < prog.variable_count(); ++v)
    if (var_cost[v] != 0) budget.terms.push_back({v, var_cost[v]});
  budget.relation = Relation::le;
  budget.rhs = instance.budget;
  budget.label = "budget";
  prog.add_constraint(std::move(budget));

  // x'_i = n_i + (votes moved to i) - (votes moved away from i).
  std::vector<long long> cast(rankings, 0);
  for (const auto& g : out.groups) cast[g.base] += static_cast<long long>(g.members.size());
  int row_index = 0;
  for (const auto& row : description.sets[set_index]) {
    LinearConstraint c;
    c.relation = row.relation;
    c.rhs = row.rhs;
    for (int i = 0; i < rankings; ++i)
      if (cast[i] != 0) c.rhs -= row.coeff[i] * to_rational(cast[i]);
    for (int v = 0; v < prog.variable_count(); ++v) {
      auto [g, j] = out.variables[v];
      Rational a = row.coeff[j] - row.coeff[out.groups[g].base];
      if (a != 0) c.terms.push_back({v, a});
    }
    c.label = "rule_" + std::to_string(++row_index);
    prog.add_constraint(std::move(c));
  }
  return out;
}

Bribery bribery_from_assignment(const BriberyInstance& instance, const RuleDescription& description,
                                const TransformationIlp& ilp, const std::vector<long long>& values) {
  Bribery b = instance.identity_bribery();
  std::vector<std::size_t> used(ilp.groups.size(), 0);
  for (int v = 0; v < ilp.program.variable_count(); ++v) {
    auto [g, j] = ilp.variables[v];
    const auto& group = ilp.groups[g];
    std::vector<Candidate> order;
    for (Candidate l : description.rankings[j]) order.push_back(ilp.label_to_candidate[l]);
    Ranking target(std::move(order));
    for (long long t = 0; t < values[v]; ++t) {
      if (used[g] >= group.members.size()) throw DomainError("assignment moves more votes than the group holds");
      b.targets[group.members[used[g]++]] = target;
    }
  }
  return b;
}

SolveResult solve_ilp(const BriberyInstance& instance, const RuleIlpOptions& options) {
  instance.validate();
  SolveResult result;
  const int m = instance.candidate_count();
  if (m == 1) {
    result.decision = true;
    result.cost = 0;
    result.witness = instance.identity_bribery();
    return result;
  }
  auto description = describe_rule(instance.rule, m, instance.vote_count(), instance.mode, options.ranking_cap);
  for (int set = 0; set < static_cast<int>(description.sets.size()); ++set) {
    auto ilp = build_ilp(instance, description, set, options.per_vote);
    auto found = ilp_feasible(ilp.program, options.ilp);
    if (!found.feasible) continue;
    Bribery b = bribery_from_assignment(instance, description, ilp, found.values);
    auto report = verify_bribery(instance, b);
    if (!report.is_solution()) throw std::logic_error("ILP assignment does not yield a solution");
    result.decision = true;
    result.cost = report.cost;
    result.witness = std::move(b);
    return result;
  }
  return result;
}

std::string ilp_listing(const BriberyInstance& instance, const TransformationIlp& ilp,
                        const RuleDescription& description) {
  std::vector<std::string> comments;
  comments.push_back("transformation ILP, inequality set " + std::to_string(ilp.set_index + 1) + " of " +
                     std::to_string(description.sets.size()));
  for (std::size_t g = 0; g < ilp.groups.size(); ++g) {
    std::ostringstream os;
    os << "group " << g + 1 << ": ranking " << ilp.groups[g].base + 1 << ", " << ilp.groups[g].members.size()
       << " vote(s), cost table of line " << ilp.groups[g].line;
    comments.push_back(os.str());
  }
  for (std::size_t j = 0; j < description.rankings.size(); ++j) {
    std::ostringstream os;
    os << "ranking " << j + 1 << ":";
    for (Candidate l : description.rankings[j]) os << " " << instance.election.name(ilp.label_to_candidate[l]);
    comments.push_back(os.str());
  }
  return to_lp_text(ilp.program, comments);
}

}  // namespace swapbribery
