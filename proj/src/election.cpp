#include "swapbribery/election.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "swapbribery/errors.hpp"

namespace swapbribery {

Ranking::Ranking(std::vector<Candidate> order) : order_(std::move(order)), position_(order_.size(), -1) {
  const int m = size();
  for (int i = 0; i < m; ++i) {
    Candidate c = order_[i];
    if (c < 0 || c >= m) throw DomainError("ranking entry " + std::to_string(c) + " out of range");
    if (position_[c] != -1) throw DomainError("candidate " + std::to_string(c) + " listed twice in ranking");
    position_[c] = i;
  }
}

Ranking Ranking::identity(int m) {
  std::vector<Candidate> order(m);
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

int rank_of(Candidate c, const Ranking& v) {
  if (c < 0 || c >= v.size()) throw DomainError("unknown candidate " + std::to_string(c));
  return v.position(c) + 1;
}

Election::Election(std::vector<std::string> names, std::vector<Vote> votes)
    : names_(std::move(names)), votes_(std::move(votes)) {
  const int m = candidate_count();
  if (m == 0) throw DomainError("election has no candidates");
  std::set<std::string, std::less<>> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty candidate name");
    if (!seen.insert(n).second) throw DomainError("duplicate candidate name '" + n + "'");
  }
  if (votes_.empty()) throw DomainError("election has no votes");
  offsets_.reserve(votes_.size());
  for (const auto& v : votes_) {
    if (v.ranking.size() != m) throw DomainError("vote does not rank every candidate");
    if (v.multiplicity < 1) throw DomainError("vote multiplicity must be positive");
    offsets_.push_back(expanded_count_);
    expanded_count_ += v.multiplicity;
  }
}

std::optional<Candidate> Election::find(std::string_view name) const {
  for (int i = 0; i < candidate_count(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int Election::line_of(int expanded_index) const {
  if (expanded_index < 0 || expanded_index >= expanded_count_) throw DomainError("expanded vote index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), expanded_index);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::vector<Ranking> Election::expanded() const {
  std::vector<Ranking> out;
  out.reserve(expanded_count_);
  for (const auto& v : votes_)
    for (int i = 0; i < v.multiplicity; ++i) out.push_back(v.ranking);
  return out;
}

Election Election::expand() const {
  std::vector<Vote> lines;
  lines.reserve(expanded_count_);
  for (auto& r : expanded()) lines.push_back({std::move(r), 1});
  return Election(names_, std::move(lines));
}

VotingRule VotingRule::approval(int k) {
  if (k < 1) throw DomainError("k-approval needs k >= 1");
  VotingRule r;
  r.kind_ = RuleKind::approval;
  r.k_ = k;
  return r;
}

VotingRule VotingRule::scoring(std::vector<long long> vector) {
  if (vector.empty()) throw DomainError("empty scoring vector");
  for (std::size_t i = 0; i < vector.size(); ++i) {
    if (vector[i] < 0) throw DomainError("negative entry in scoring vector");
    if (i > 0 && vector[i] > vector[i - 1]) throw DomainError("scoring vector must be non-increasing");
  }
  VotingRule r;
  r.kind_ = RuleKind::scoring;
  r.vector_ = std::move(vector);
  return r;
}

VotingRule VotingRule::bucklin() {
  VotingRule r;
  r.kind_ = RuleKind::bucklin;
  return r;
}

int VotingRule::k() const {
  if (kind_ != RuleKind::approval) throw UnsupportedRule("rule is not k-approval");
  return k_;
}

long long VotingRule::points(int position, int m) const {
  switch (kind_) {
    case RuleKind::approval:
      return position < k_ ? 1 : 0;
    case RuleKind::scoring:
      (void)m;
      return vector_[position];
    case RuleKind::bucklin:
      break;
  }
  throw UnsupportedRule("Bucklin is not score-additive");
}

void VotingRule::validate(int m) const {
  if (kind_ == RuleKind::approval && (k_ < 1 || k_ > m))
    throw DomainError("k-approval needs 1 <= k <= m (k=" + std::to_string(k_) + ", m=" + std::to_string(m) + ")");
  if (kind_ == RuleKind::scoring && static_cast<int>(vector_.size()) != m)
    throw DomainError("scoring vector length differs from candidate count");
}

std::vector<long long> scores(std::span<const Ranking> votes, int m, const VotingRule& rule) {
  if (rule.is_bucklin()) throw UnsupportedRule("Bucklin is not score-additive");
  rule.validate(m);
  std::vector<long long> s(m, 0);
  for (const auto& v : votes)
    for (int pos = 0; pos < m; ++pos) s[v[pos]] += rule.points(pos, m);
  return s;
}

std::vector<long long> scores(const Election& e, const VotingRule& rule) {
  if (rule.is_bucklin()) throw UnsupportedRule("Bucklin is not score-additive");
  const int m = e.candidate_count();
  rule.validate(m);
  std::vector<long long> s(m, 0);
  for (const auto& v : e.votes())
    for (int pos = 0; pos < m; ++pos) s[v.ranking[pos]] += rule.points(pos, m) * v.multiplicity;
  return s;
}

long long score(Candidate c, const Election& e, const VotingRule& rule) {
  if (c < 0 || c >= e.candidate_count()) throw DomainError("unknown candidate");
  return scores(e, rule)[c];
}

std::vector<long long> approval_counts(std::span<const Ranking> votes, int m, int b) {
  std::vector<long long> s(m, 0);
  for (const auto& v : votes)
    for (int pos = 0; pos < b && pos < m; ++pos) ++s[v[pos]];
  return s;
}

int bucklin_round(std::span<const Ranking> votes, int m) {
  const long long majority = static_cast<long long>(votes.size()) / 2 + 1;
  std::vector<long long> counts(m, 0);
  for (int b = 1; b <= m; ++b) {
    for (const auto& v : votes) ++counts[v[b - 1]];
    if (*std::max_element(counts.begin(), counts.end()) >= majority) return b;
  }
  throw DomainError("Bucklin round undefined for an empty election");
}

namespace {

std::vector<Candidate> argmax(std::span<const long long> s) {
  std::vector<Candidate> out;
  const long long best = *std::max_element(s.begin(), s.end());
  for (int c = 0; c < static_cast<int>(s.size()); ++c)
    if (s[c] == best) out.push_back(c);
  return out;
}

}  // namespace

std::vector<Candidate> winners(std::span<const Ranking> votes, int m, const VotingRule& rule) {
  if (votes.empty()) throw DomainError("winners of an empty election");
  if (rule.is_bucklin()) return argmax(approval_counts(votes, m, bucklin_round(votes, m)));
  return argmax(scores(votes, m, rule));
}

std::vector<Candidate> winners(const Election& e, const VotingRule& rule) {
  if (rule.is_bucklin()) {
    auto votes = e.expanded();
    return winners(votes, e.candidate_count(), rule);
  }
  return argmax(scores(e, rule));
}

bool wins_with_scores(Candidate p, std::span<const long long> s, WinnerMode mode) {
  for (int c = 0; c < static_cast<int>(s.size()); ++c) {
    if (c == p) continue;
    if (mode == WinnerMode::co_winner ? s[c] > s[p] : s[c] >= s[p]) return false;
  }
  return true;
}

bool is_winner(Candidate p, std::span<const Ranking> votes, int m, const VotingRule& rule, WinnerMode mode) {
  if (rule.is_bucklin()) {
    if (votes.empty()) throw DomainError("winners of an empty election");
    auto counts = approval_counts(votes, m, bucklin_round(votes, m));
    return wins_with_scores(p, counts, mode);
  }
  auto s = scores(votes, m, rule);
  return wins_with_scores(p, s, mode);
}

bool is_winner(Candidate p, const Election& e, const VotingRule& rule, WinnerMode mode) {
  if (rule.is_bucklin()) {
    auto votes = e.expanded();
    return is_winner(p, votes, e.candidate_count(), rule, mode);
  }
  auto s = scores(e, rule);
  return wins_with_scores(p, s, mode);
}

}  // namespace swapbribery
