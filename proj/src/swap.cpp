#include "swapbribery/swap.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>

#include "swapbribery/errors.hpp"

namespace swapbribery {

void VoteCosts::set(Candidate a, Candidate b, const Rational& cost) {
  if (cost < 0) throw DomainError("negative swap cost");
  if (a == b) throw DomainError("swap cost for a candidate with itself");
  overrides_[{a, b}] = cost;
}

void VoteCosts::set_symmetric(Candidate a, Candidate b, const Rational& cost) {
  set(a, b, cost);
  set(b, a, cost);
}

void VoteCosts::set_default(std::optional<Rational> cost) {
  if (cost && *cost < 0) throw DomainError("negative default cost");
  default_ = std::move(cost);
}

const Rational& VoteCosts::cost(Candidate a, Candidate b, const Rational& fallback) const {
  if (!overrides_.empty()) {
    auto it = overrides_.find({a, b});
    if (it != overrides_.end()) return it->second;
  }
  return default_ ? *default_ : fallback;
}

SwapCostFunction::SwapCostFunction(int lines, Rational global_default)
    : global_default_(std::move(global_default)), tables_(lines) {
  if (global_default_ < 0) throw DomainError("negative default cost");
}

void BriberyInstance::validate() const {
  const int m = election.candidate_count();
  rule.validate(m);
  if (preferred < 0 || preferred >= m) throw DomainError("preferred candidate not in roster");
  if (budget < 0) throw DomainError("negative budget");
  if (costs.line_count() != election.line_count()) throw DomainError("cost tables do not match the vote lines");
  for (int l = 0; l < costs.line_count(); ++l)
    for (const auto& [pair, c] : costs.line(l).overrides())
      if (pair.first < 0 || pair.first >= m || pair.second < 0 || pair.second >= m)
        throw DomainError("cost override names an unknown candidate");
}

Ranking apply_swaps(const Ranking& v, std::span<const Swap> swaps) {
  const int m = v.size();
  if (swaps.size() > 63) throw DomainError("swap sets larger than 63 are not supported");
  for (const auto& s : swaps) {
    if (s.first == s.second) throw DomainError("swap of a candidate with itself");
    if (s.first < 0 || s.first >= m || s.second < 0 || s.second >= m) throw DomainError("swap names unknown candidate");
  }
  for (std::size_t i = 0; i < swaps.size(); ++i)
    for (std::size_t j = i + 1; j < swaps.size(); ++j)
      if (swaps[i].first == swaps[j].first && swaps[i].second == swaps[j].second)
        throw DomainError("duplicate swap in set");

  const std::uint64_t full = swaps.size() == 64 ? ~0ULL : ((1ULL << swaps.size()) - 1);
  std::unordered_set<std::uint64_t> dead;
  std::vector<Candidate> order = v.order();
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;

  // The ranking reached is a function of the applied subset, so failed subsets can be memoized.
  std::function<bool(std::uint64_t)> search = [&](std::uint64_t mask) -> bool {
    if (mask == full) return true;
    if (dead.count(mask)) return false;
    for (std::size_t i = 0; i < swaps.size(); ++i) {
      if (mask & (1ULL << i)) continue;
      const auto& s = swaps[i];
      if (pos[s.first] + 1 != pos[s.second]) continue;
      int pa = pos[s.first], pb = pos[s.second];
      std::swap(order[pa], order[pb]);
      pos[s.first] = pb;
      pos[s.second] = pa;
      if (search(mask | (1ULL << i))) return true;
      std::swap(order[pa], order[pb]);
      pos[s.first] = pa;
      pos[s.second] = pb;
    }
    dead.insert(mask);
    return false;
  };
  if (!search(0)) throw AdmissibilityError("swap set is not admissible in this vote");
  return Ranking(std::move(order));
}

namespace {

// Insertion sort of v by target position; visits each inverted pair once as
// (earlier in v, later in v), in a valid sequential swap order.
template <typename Visit>
void for_each_inversion(const Ranking& v, const Ranking& target, Visit&& visit) {
  if (v.size() != target.size()) throw DomainError("rankings over different rosters");
  std::vector<Candidate> a = v.order();
  for (int i = 1; i < static_cast<int>(a.size()); ++i) {
    Candidate y = a[i];
    int j = i;
    while (j > 0 && target.position(a[j - 1]) > target.position(y)) {
      visit(a[j - 1], y);
      a[j] = a[j - 1];
      --j;
    }
    a[j] = y;
  }
}

}  // namespace

std::vector<Swap> bubble_swaps(const Ranking& v, const Ranking& target, int vote) {
  std::vector<Swap> out;
  for_each_inversion(v, target, [&](Candidate x, Candidate y) { out.push_back({vote, x, y}); });
  return out;
}

Rational transform_cost(const Ranking& v, const Ranking& target, const PairCosts& costs) {
  Rational total = 0;
  for_each_inversion(v, target, [&](Candidate x, Candidate y) { total += costs(x, y); });
  return total;
}

long long kendall_tau(const Ranking& a, const Ranking& b) {
  long long count = 0;
  for_each_inversion(a, b, [&](Candidate, Candidate) { ++count; });
  return count;
}

namespace {

std::vector<char> chosen_mask(const Ranking& v, std::span<const Candidate> chosen) {
  std::vector<char> mask(v.size(), 0);
  for (Candidate c : chosen) {
    if (c < 0 || c >= v.size()) throw DomainError("unknown candidate in chosen set");
    if (mask[c]) throw DomainError("candidate repeated in chosen set");
    mask[c] = 1;
  }
  return mask;
}

}  // namespace

Rational move_to_top_cost(const Ranking& v, std::span<const Candidate> chosen, int k, const PairCosts& costs) {
  if (static_cast<int>(chosen.size()) != k) throw DomainError("chosen set size differs from k");
  auto mask = chosen_mask(v, chosen);
  Rational total = 0;
  std::vector<Candidate> passed;  // non-chosen candidates seen so far
  for (Candidate c : v) {
    if (!mask[c]) {
      passed.push_back(c);
      continue;
    }
    for (Candidate a : passed) total += costs(a, c);
  }
  return total;
}

Ranking move_to_top(const Ranking& v, std::span<const Candidate> chosen) {
  auto mask = chosen_mask(v, chosen);
  std::vector<Candidate> order;
  order.reserve(v.size());
  for (Candidate c : v)
    if (mask[c]) order.push_back(c);
  for (Candidate c : v)
    if (!mask[c]) order.push_back(c);
  return Ranking(std::move(order));
}

std::pair<Rational, Rational> cost_range(const BriberyInstance& instance) {
  const long long m = instance.candidate_count();
  const long long pairs = m * (m - 1);
  std::optional<Rational> lo, hi;
  auto note = [&](const Rational& c) {
    if (!lo || c < *lo) lo = c;
    if (!hi || c > *hi) hi = c;
  };
  const auto& f = instance.costs;
  for (int l = 0; l < f.line_count(); ++l) {
    const auto& table = f.line(l);
    long long overridden = 0;
    for (const auto& [pair, c] : table.overrides()) {
      ++overridden;
      note(c);
    }
    if (overridden < pairs) note(table.default_cost() ? *table.default_cost() : f.global_default());
  }
  if (!lo) return {0, 0};
  return {*lo, *hi};
}

bool all_costs_equal(const BriberyInstance& instance, const Rational& value) {
  if (instance.candidate_count() < 2) return true;
  auto [lo, hi] = cost_range(instance);
  return lo == value && hi == value;
}

BriberyReport verify_bribery(const BriberyInstance& instance, const Bribery& bribery) {
  const int n = instance.vote_count();
  const int m = instance.candidate_count();
  if (static_cast<int>(bribery.targets.size()) != n) throw DomainError("bribery does not cover every vote");
  BriberyReport report;
  report.cost = 0;
  for (int i = 0; i < n; ++i) {
    if (bribery.targets[i].size() != m) throw DomainError("bribery target is not a full ranking");
    report.cost += transform_cost(instance.election.expanded_ranking(i), bribery.targets[i], instance.costs_of(i));
  }
  report.within_budget = report.cost <= instance.budget;
  report.preferred_wins = is_winner(instance.preferred, bribery.targets, m, instance.rule, instance.mode);
  return report;
}

}  // namespace swapbribery
