#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "swapbribery/errors.hpp"
#include "swapbribery/reductions.hpp"

namespace swapbribery {

PartialOrder::PartialOrder(int m) : m_(m) {
  if (m < 0) throw DomainError("negative candidate count");
  before_.assign(static_cast<std::size_t>(m) * m, 0);
}

PartialOrder::PartialOrder(int m, const std::vector<std::pair<Candidate, Candidate>>& pairs) : PartialOrder(m) {
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= m || b >= m) throw DomainError("partial order pair out of range");
    before_[a * m + b] = 1;
  }
  for (int via = 0; via < m; ++via)
    for (int a = 0; a < m; ++a)
      if (before_[a * m + via])
        for (int b = 0; b < m; ++b)
          if (before_[via * m + b]) before_[a * m + b] = 1;
  for (int a = 0; a < m; ++a)
    if (before_[a * m + a]) throw DomainError("partial order contains a cycle");
}

PartialOrder PartialOrder::from_ranking(const Ranking& v) {
  PartialOrder out(v.size());
  for (int i = 0; i < v.size(); ++i)
    for (int j = i + 1; j < v.size(); ++j) out.before_[v[i] * out.m_ + v[j]] = 1;
  return out;
}

std::vector<std::pair<Candidate, Candidate>> PartialOrder::pairs() const {
  std::vector<std::pair<Candidate, Candidate>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (requires_before(a, b)) out.emplace_back(a, b);
  return out;
}

bool PartialOrder::extended_by(const Ranking& v) const {
  if (v.size() != m_) return false;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (requires_before(a, b) && !v.precedes(a, b)) return false;
  return true;
}

Ranking PartialOrder::lexicographic_extension() const {
  std::vector<int> pending(m_, 0);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) pending[b] += requires_before(a, b);
  std::vector<char> placed(m_, 0);
  std::vector<Candidate> order;
  order.reserve(m_);
  for (int step = 0; step < m_; ++step) {
    int next = 0;
    while (placed[next] || pending[next]) ++next;  // a closed acyclic order always has a minimal element
    placed[next] = 1;
    order.push_back(next);
    for (int b = 0; b < m_; ++b) pending[b] -= requires_before(next, b);
  }
  return Ranking(std::move(order));
}

long long PartialOrder::for_each_extension(const std::function<bool(const Ranking&)>& visit) const {
  std::vector<int> pending(m_, 0);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) pending[b] += requires_before(a, b);
  std::vector<char> placed(m_, 0);
  std::vector<Candidate> order;
  long long count = 0;
  bool stop = false;
  auto walk = [&](auto&& self) -> void {
    if (static_cast<int>(order.size()) == m_) {
      ++count;
      if (!visit(Ranking(order))) stop = true;
      return;
    }
    for (int c = 0; c < m_ && !stop; ++c) {
      if (placed[c] || pending[c]) continue;
      placed[c] = 1;
      order.push_back(c);
      for (int b = 0; b < m_; ++b) pending[b] -= requires_before(c, b);
      self(self);
      for (int b = 0; b < m_; ++b) pending[b] += requires_before(c, b);
      order.pop_back();
      placed[c] = 0;
    }
  };
  walk(walk);
  return count;
}

void PossibleWinnerInstance::validate() const {
  const int m = candidate_count();
  if (m == 0) throw DomainError("no candidates");
  if (votes.empty()) throw DomainError("no votes");
  for (const auto& v : votes)
    if (v.size() != m) throw DomainError("partial vote over a different roster");
  if (preferred < 0 || preferred >= m) throw DomainError("preferred candidate out of range");
  rule.validate(m);
}

PossibleWinnerInstance sb_to_pw(const BriberyInstance& instance) {
  instance.validate();
  if (instance.budget != 0) throw PreconditionError("possible winner translation needs budget 0");
  const int m = instance.candidate_count();
  std::optional<Rational> delta;
  PossibleWinnerInstance out;
  out.names = instance.election.names();
  out.rule = instance.rule;
  out.preferred = instance.preferred;
  out.mode = instance.mode;
  for (int line = 0; line < instance.election.line_count(); ++line) {
    const Vote& vote = instance.election.vote(line);
    std::vector<std::pair<Candidate, Candidate>> fixed;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const Rational& c = instance.costs.cost(line, vote.ranking[i], vote.ranking[j]);
        if (c == 0) continue;
        if (!delta) delta = c;
        if (c != *delta)
          throw PreconditionError("costs must take a single positive value besides 0 (found " + to_string(*delta) +
                                  " and " + to_string(c) + ")");
        fixed.emplace_back(vote.ranking[i], vote.ranking[j]);
      }
    PartialOrder order(m, fixed);
    for (int copy = 0; copy < vote.multiplicity; ++copy) out.votes.push_back(order);
  }
  return out;
}

BriberyInstance pw_to_sb(const PossibleWinnerInstance& instance) {
  instance.validate();
  const int n = static_cast<int>(instance.votes.size());
  const int m = instance.candidate_count();
  std::vector<Vote> votes;
  votes.reserve(n);
  for (const auto& order : instance.votes) votes.push_back({order.lexicographic_extension(), 1});
  BriberyInstance out;
  out.election = Election(instance.names, std::move(votes));
  out.rule = instance.rule;
  out.preferred = instance.preferred;
  out.mode = instance.mode;
  out.budget = 0;
  out.costs = SwapCostFunction(n, 0);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (instance.votes[i].requires_before(a, b)) out.costs.line(i).set(a, b, 1);
  return out;
}

bool possible_winner_brute(const PossibleWinnerInstance& instance, double cap) {
  instance.validate();
  const int m = instance.candidate_count();
  const int n = static_cast<int>(instance.votes.size());
  const bool by_score = !instance.rule.is_bucklin();

  // Per vote, the distinct outcomes: a point vector for score-based rules,
  // the whole ranking for Bucklin.
  std::vector<std::vector<std::vector<long long>>> options(n);
  double product = 1;
  for (int i = 0; i < n; ++i) {
    std::set<std::vector<long long>> seen;
    long long listed = 0;
    instance.votes[i].for_each_extension([&](const Ranking& v) {
      if (++listed > cap) throw ResourceError("possible_winner_brute: extensions of one vote exceed the cap");
      std::vector<long long> key(m);
      if (by_score)
        for (int pos = 0; pos < m; ++pos) key[v[pos]] = instance.rule.points(pos, m);
      else
        key.assign(v.begin(), v.end());
      seen.insert(std::move(key));
      return true;
    });
    options[i].assign(seen.begin(), seen.end());
    product *= static_cast<double>(options[i].size());
    if (product > cap) throw ResourceError("possible_winner_brute: joint extensions exceed the cap");
  }

  std::vector<long long> tally(m, 0);
  std::vector<Ranking> chosen(n);
  auto search = [&](auto&& self, int i) -> bool {
    if (i == n) {
      if (by_score) return wins_with_scores(instance.preferred, tally, instance.mode);
      return is_winner(instance.preferred, chosen, m, instance.rule, instance.mode);
    }
    for (const auto& key : options[i]) {
      if (by_score) {
        for (int c = 0; c < m; ++c) tally[c] += key[c];
      } else {
        chosen[i] = Ranking(std::vector<Candidate>(key.begin(), key.end()));
      }
      bool found = self(self, i + 1);
      if (by_score)
        for (int c = 0; c < m; ++c) tally[c] -= key[c];
      if (found) return true;
    }
    return false;
  };
  return search(search, 0);
}

PartialOrder random_partial_order(int m, double density, std::mt19937_64& rng) {
  std::vector<Candidate> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::vector<std::pair<Candidate, Candidate>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (keep(rng)) pairs.emplace_back(order[i], order[j]);
  return PartialOrder(m, pairs);
}

}  // namespace swapbribery
