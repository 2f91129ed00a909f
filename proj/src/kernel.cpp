#include "swapbribery/kernel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "swapbribery/errors.hpp"

namespace swapbribery {

namespace {

struct Window {
  int lo;  // 1-based, inclusive
  int hi;
};

Window window_of(int m, int k, long long b) {
  long long lo = std::max<long long>(1, k - b + 1);
  long long hi = std::min<long long>(m, k + b);
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

void require_kernel_input(const BriberyInstance& instance) {
  instance.validate();
  if (!instance.rule.is_approval()) throw PreconditionError("kernels require k-approval");
  if (instance.candidate_count() > 1 && cost_range(instance).first < 1)
    throw PreconditionError("kernels require every swap to cost at least 1");
}

std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  while (taken.count(name)) name += "_";
  taken.insert(name);
  return name;
}

}  // namespace

std::vector<Candidate> relevant_candidates(const Election& election, int k, long long b) {
  const int m = election.candidate_count();
  if (k < 1 || k > m) throw DomainError("k out of range");
  if (b < 0) throw DomainError("negative budget");
  auto [lo, hi] = window_of(m, k, b);
  std::vector<char> seen(m, 0);
  for (const auto& vote : election.votes())
    for (int pos = lo; pos <= hi; ++pos) seen[vote.ranking[pos - 1]] = 1;
  std::vector<Candidate> out;
  for (Candidate c = 0; c < m; ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

std::vector<Candidate> relevant_candidates(const BriberyInstance& instance) {
  require_kernel_input(instance);
  return relevant_candidates(instance.election, instance.rule.k(), floor_to_ll(instance.budget));
}

KernelOutput kernelize(const BriberyInstance& instance) {
  require_kernel_input(instance);
  if (instance.mode != WinnerMode::co_winner)
    throw PreconditionError("the kernel is only equivalent in co-winner mode");
  const Election& e = instance.election;
  const int m = e.candidate_count();
  const int n = e.vote_count();
  const int k = instance.rule.k();
  const long long b = floor_to_ll(instance.budget);
  const long long kprime = b + 1;
  const Candidate p = instance.preferred;

  KernelOutput out;
  out.relevant = relevant_candidates(e, k, b);
  std::vector<char> relevant(m, 0);
  for (Candidate c : out.relevant) relevant[c] = 1;

  auto original = scores(e, instance.rule);
  for (Candidate c = 0; c < m; ++c) {
    if (relevant[c] || c == p) continue;
    if (!out.sentinel || original[c] > original[*out.sentinel]) out.sentinel = c;
  }

  std::vector<char> kept(m, 0);
  for (Candidate c : out.relevant) kept[c] = 1;
  kept[p] = 1;
  if (out.sentinel) kept[*out.sentinel] = 1;

  std::vector<std::string> names;
  std::set<std::string> taken(e.names().begin(), e.names().end());
  std::vector<Candidate> to_kernel(m, -1);
  for (Candidate c = 0; c < m; ++c)
    if (kept[c]) {
      to_kernel[c] = static_cast<Candidate>(names.size());
      names.push_back(e.name(c));
      out.provenance.push_back(c);
    }
  auto new_dummy = [&] {
    Candidate d = static_cast<Candidate>(names.size());
    names.push_back(fresh_name("d" + std::to_string(out.dummies.size() + 1), taken));
    out.dummies.push_back(d);
    out.provenance.push_back(std::nullopt);
    return d;
  };

  auto [lo, hi] = window_of(m, k, b);
  const long long lead = kprime - (k - lo + 1);
  const long long prefix_length = 2 * b + 1;
  const Rational out_of_reach = to_rational(b + 1);

  std::vector<std::vector<Candidate>> prefixes;
  std::vector<VoteCosts> tables;
  std::vector<long long> truncated_score(m, 0);
  for (int i = 0; i < n; ++i) {
    const Ranking& v = e.expanded_ranking(i);
    auto costs = instance.costs_of(i);
    std::vector<Candidate> prefix;
    for (long long j = 0; j < lead; ++j) prefix.push_back(new_dummy());
    for (int pos = lo; pos <= hi; ++pos) prefix.push_back(to_kernel[v[pos - 1]]);
    // A window cut short by the end of the vote is filled up, so the
    // appended tail stays out of reach.
    while (static_cast<long long>(prefix.size()) < prefix_length) prefix.push_back(new_dummy());

    // Dummies are priced out of reach, so they act like the vote boundary.
    VoteCosts table;
    table.set_default(out_of_reach);
    for (int x = lo; x <= hi; ++x)
      for (int y = lo; y <= hi; ++y)
        if (x != y) table.set(to_kernel[v[x - 1]], to_kernel[v[y - 1]], costs(v[x - 1], v[y - 1]));
    for (int pos = lo; pos <= k; ++pos) ++truncated_score[v[pos - 1]];
    prefixes.push_back(std::move(prefix));
    tables.push_back(std::move(table));
  }
  out.truncated_votes = n;

  for (Candidate c = 0; c < m; ++c) {
    if (!kept[c]) continue;
    for (long long extra = original[c] - truncated_score[c]; extra > 0; --extra) {
      std::vector<Candidate> prefix{to_kernel[c]};
      for (long long j = 0; j < 2 * b; ++j) prefix.push_back(new_dummy());
      prefixes.push_back(std::move(prefix));
      tables.emplace_back();
      tables.back().set_default(out_of_reach);
    }
  }

  const int total = static_cast<int>(names.size());
  std::vector<Vote> votes;
  votes.reserve(prefixes.size());
  for (auto& prefix : prefixes) {
    std::vector<char> used(total, 0);
    for (Candidate c : prefix) used[c] = 1;
    for (Candidate c = 0; c < total; ++c)
      if (!used[c]) prefix.push_back(c);
    votes.push_back({Ranking(std::move(prefix)), 1});
  }

  const long long vk = static_cast<long long>(votes.size());
  const long long ck = total;
  if (vk > (2 * n * b + 3) * n || ck > n + (2 * n * b + 2) * (2 * n * b + 1))
    throw std::logic_error("kernel exceeds its size bound");

  BriberyInstance& ki = out.instance;
  ki.election = Election(std::move(names), std::move(votes));
  ki.rule = VotingRule::approval(static_cast<int>(kprime));
  ki.preferred = to_kernel[p];
  ki.costs = SwapCostFunction(ki.election.line_count());
  for (std::size_t i = 0; i < tables.size(); ++i) ki.costs.line(static_cast<int>(i)) = std::move(tables[i]);
  ki.budget = instance.budget;
  ki.mode = instance.mode;
  return out;
}

BriberyInstance simple_truncation_kernel(const BriberyInstance& instance) {
  require_kernel_input(instance);
  const Election& e = instance.election;
  const int m = e.candidate_count();
  const int k = instance.rule.k();
  const long long b = floor_to_ll(instance.budget);
  const long long depth = std::min<long long>(m, k + b);

  std::vector<char> kept(m, 0);
  kept[instance.preferred] = 1;
  for (const auto& vote : e.votes())
    for (long long pos = 0; pos < depth; ++pos) kept[vote.ranking[static_cast<int>(pos)]] = 1;

  std::vector<Candidate> to_kernel(m, -1);
  std::vector<std::string> names;
  for (Candidate c = 0; c < m; ++c)
    if (kept[c]) {
      to_kernel[c] = static_cast<Candidate>(names.size());
      names.push_back(e.name(c));
    }
  const long long bound = (k + b) * e.vote_count() + 1;
  if (static_cast<long long>(names.size()) > bound) throw std::logic_error("truncation kernel exceeds its size bound");

  std::vector<Vote> votes;
  SwapCostFunction costs(e.line_count(), instance.costs.global_default());
  for (int line = 0; line < e.line_count(); ++line) {
    const Vote& vote = e.vote(line);
    std::vector<Candidate> order;
    for (Candidate c : vote.ranking)
      if (kept[c]) order.push_back(to_kernel[c]);
    votes.push_back({Ranking(std::move(order)), vote.multiplicity});
    const VoteCosts& source = instance.costs.line(line);
    VoteCosts& target = costs.line(line);
    target.set_default(source.default_cost());
    for (const auto& [pair, cost] : source.overrides())
      if (kept[pair.first] && kept[pair.second]) target.set(to_kernel[pair.first], to_kernel[pair.second], cost);
  }

  BriberyInstance out;
  out.election = Election(std::move(names), std::move(votes));
  out.rule = instance.rule;
  out.preferred = to_kernel[instance.preferred];
  out.costs = std::move(costs);
  out.budget = instance.budget;
  out.mode = instance.mode;
  return out;
}

}  // namespace swapbribery
