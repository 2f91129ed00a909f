#include "swapbribery/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swapbribery/errors.hpp"

namespace swapbribery {

std::vector<PricedSubset> priced_top_sets(const Ranking& v, int k, const PairCosts& costs,
                                          const std::optional<Rational>& limit) {
  const int m = v.size();
  if (k < 0 || k > m) throw DomainError("subset size out of range");
  std::vector<PricedSubset> out;
  std::vector<Candidate> chosen, passed;
  Rational cost = 0;

  // Walk v front to back deciding membership; a member pays for every
  // non-member already passed, so the running cost only grows.
  auto walk = [&](auto&& self, int pos) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      out.push_back({chosen, cost});
      return;
    }
    if (m - pos < k - static_cast<int>(chosen.size())) return;
    Candidate c = v[pos];
    Rational extra = 0;
    for (Candidate a : passed) extra += costs(a, c);
    if (!limit || cost + extra <= *limit) {
      chosen.push_back(c);
      cost += extra;
      self(self, pos + 1);
      cost -= extra;
      chosen.pop_back();
    }
    passed.push_back(c);
    self(self, pos + 1);
    passed.pop_back();
  };
  walk(walk, 0);
  std::stable_sort(out.begin(), out.end(), [](const PricedSubset& a, const PricedSubset& b) { return a.cost < b.cost; });
  return out;
}

namespace {

double log_binomial(int m, int k) { return std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0); }

void check_space(double log_size, double cap, const char* what) {
  if (log_size > std::log(cap) + 1e-9)
    throw ResourceError(std::string(what) + ": search space exceeds the configured cap of " + std::to_string(cap));
}

}  // namespace

SolveResult brute_topk(const BriberyInstance& instance, const OracleOptions& options) {
  instance.validate();
  if (!instance.rule.is_approval()) throw DomainError("brute_topk requires k-approval");
  const int m = instance.candidate_count();
  const int n = instance.vote_count();
  const int k = instance.rule.k();
  const Candidate p = instance.preferred;

  if (!options.prune_at_budget) check_space(n * log_binomial(m, k), options.cap, "brute_topk");
  std::optional<Rational> limit;
  if (options.prune_at_budget) limit = instance.budget;

  std::vector<std::vector<PricedSubset>> choices(n);
  for (int i = 0; i < n; ++i)
    choices[i] = priced_top_sets(instance.election.expanded_ranking(i), k, instance.costs_of(i), limit);

  std::vector<long long> tally(m, 0);
  std::vector<int> pick(n, 0), best_pick;
  std::optional<Rational> best;
  Rational spent = 0;
  double leaves = 0;

  auto search = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (options.prune_at_budget && ++leaves > options.cap)
        throw ResourceError("brute_topk: visited leaves exceed the configured cap");
      if (wins_with_scores(p, tally, instance.mode) && (!best || spent < *best)) {
        best = spent;
        best_pick = pick;
      }
      return;
    }
    for (int j = 0; j < static_cast<int>(choices[i].size()); ++j) {
      const auto& option = choices[i][j];
      Rational next = spent + option.cost;
      if (best && next >= *best) break;
      if (limit && next > *limit) break;
      for (Candidate c : option.members) ++tally[c];
      pick[i] = j;
      std::swap(spent, next);
      self(self, i + 1);
      std::swap(spent, next);
      for (Candidate c : option.members) --tally[c];
    }
  };
  search(search, 0);

  SolveResult result;
  if (!best) return result;
  result.cost = *best;
  result.decision = *best <= instance.budget;
  Bribery b;
  b.targets.reserve(n);
  for (int i = 0; i < n; ++i)
    b.targets.push_back(move_to_top(instance.election.expanded_ranking(i), choices[i][best_pick[i]].members));
  result.witness = std::move(b);
  return result;
}

SolveResult brute_rankings(const BriberyInstance& instance, const OracleOptions& options) {
  instance.validate();
  const int m = instance.candidate_count();
  const int n = instance.vote_count();
  if (!options.prune_at_budget) check_space(n * std::lgamma(m + 1.0), options.cap, "brute_rankings");
  if (m > 10) throw ResourceError("brute_rankings: more than 10 candidates");

  struct Option {
    Ranking target;
    Rational cost;
  };
  std::vector<std::vector<Option>> choices(n);
  for (int i = 0; i < n; ++i) {
    const Ranking& v = instance.election.expanded_ranking(i);
    auto costs = instance.costs_of(i);
    std::vector<Candidate> order = Ranking::identity(m).order();
    do {
      Ranking target(order);
      Rational c = transform_cost(v, target, costs);
      if (!options.prune_at_budget || c <= instance.budget) choices[i].push_back({std::move(target), std::move(c)});
    } while (std::next_permutation(order.begin(), order.end()));
    std::stable_sort(choices[i].begin(), choices[i].end(),
                     [](const Option& a, const Option& b) { return a.cost < b.cost; });
  }

  std::vector<Ranking> current(n);
  std::vector<Ranking> best_targets;
  std::optional<Rational> best;
  Rational spent = 0;
  double leaves = 0;

  auto search = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (options.prune_at_budget && ++leaves > options.cap)
        throw ResourceError("brute_rankings: visited leaves exceed the configured cap");
      if (is_winner(instance.preferred, current, m, instance.rule, instance.mode) && (!best || spent < *best)) {
        best = spent;
        best_targets = current;
      }
      return;
    }
    for (const auto& option : choices[i]) {
      Rational next = spent + option.cost;
      if (best && next >= *best) break;
      if (options.prune_at_budget && next > instance.budget) break;
      current[i] = option.target;
      std::swap(spent, next);
      self(self, i + 1);
      std::swap(spent, next);
    }
  };
  search(search, 0);

  SolveResult result;
  if (!best) return result;
  result.cost = *best;
  result.decision = *best <= instance.budget;
  result.witness = Bribery{std::move(best_targets)};
  return result;
}

}  // namespace swapbribery
