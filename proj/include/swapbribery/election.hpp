#pragma once

// Candidates, rankings, elections, voting rules, and winner determination.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace swapbribery {

/// Dense candidate index in 0..m-1.
using Candidate = int;

/// A strict linear order over candidates 0..m-1, with O(1) position lookup.
class Ranking {
 public:
  Ranking() = default;
  /// Throws DomainError unless order is a permutation of 0..order.size()-1.
  explicit Ranking(std::vector<Candidate> order);

  static Ranking identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  /// Candidate at 0-based position.
  Candidate at(int position) const { return order_[position]; }
  Candidate operator[](int position) const { return order_[position]; }
  /// 0-based position of c.
  int position(Candidate c) const { return position_[c]; }
  bool precedes(Candidate a, Candidate b) const { return position_[a] < position_[b]; }

  const std::vector<Candidate>& order() const { return order_; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  friend bool operator==(const Ranking& a, const Ranking& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Ranking& a, const Ranking& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<Candidate> order_;
  std::vector<int> position_;
};

/// 1-based position of c in v. Throws DomainError if c is not in the roster.
int rank_of(Candidate c, const Ranking& v);

struct Vote {
  Ranking ranking;
  int multiplicity = 1;
};

/// Roster of named candidates plus vote lines with multiplicities.
class Election {
 public:
  Election() = default;
  /// Validates: unique non-empty names, every ranking permutes the roster,
  /// multiplicities >= 1 and at least one vote.
  Election(std::vector<std::string> names, std::vector<Vote> votes);

  int candidate_count() const { return static_cast<int>(names_.size()); }
  /// Number of vote lines (before expanding multiplicities).
  int line_count() const { return static_cast<int>(votes_.size()); }
  /// Expanded vote count n = sum of multiplicities.
  int vote_count() const { return expanded_count_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Candidate c) const { return names_.at(c); }
  std::optional<Candidate> find(std::string_view name) const;

  const std::vector<Vote>& votes() const { return votes_; }
  const Vote& vote(int line) const { return votes_.at(line); }

  /// First expanded index belonging to a vote line.
  int expanded_offset(int line) const { return offsets_.at(line); }
  /// Vote line that holds the given expanded index.
  int line_of(int expanded_index) const;
  const Ranking& expanded_ranking(int expanded_index) const { return votes_[line_of(expanded_index)].ranking; }
  /// One ranking per expanded vote, in line order.
  std::vector<Ranking> expanded() const;

  /// Same roster, one multiplicity-1 line per expanded vote.
  Election expand() const;

 private:
  std::vector<std::string> names_;
  std::vector<Vote> votes_;
  std::vector<int> offsets_;
  int expanded_count_ = 0;
};

enum class RuleKind { approval, scoring, bucklin };

/// k-approval, an explicit scoring vector, or Bucklin.
class VotingRule {
 public:
  static VotingRule approval(int k);
  /// Non-increasing, non-negative scoring vector s_1..s_m.
  static VotingRule scoring(std::vector<long long> vector);
  static VotingRule bucklin();

  RuleKind kind() const { return kind_; }
  bool is_approval() const { return kind_ == RuleKind::approval; }
  bool is_bucklin() const { return kind_ == RuleKind::bucklin; }
  /// k for k-approval; throws UnsupportedRule otherwise.
  int k() const;
  const std::vector<long long>& scoring_vector() const { return vector_; }

  /// Points awarded at 0-based position in an m-candidate vote.
  long long points(int position, int m) const;

  /// Throws DomainError if the rule does not fit m candidates.
  void validate(int m) const;

  friend bool operator==(const VotingRule&, const VotingRule&) = default;

 private:
  RuleKind kind_ = RuleKind::approval;
  int k_ = 1;
  std::vector<long long> vector_;
};

enum class WinnerMode { co_winner, unique };

/// Multiplicity-weighted score of c; throws UnsupportedRule for Bucklin.
long long score(Candidate c, const Election& e, const VotingRule& rule);
/// Scores of every candidate (score-based rules only).
std::vector<long long> scores(const Election& e, const VotingRule& rule);
/// Scores over a list of rankings, each counted once.
std::vector<long long> scores(std::span<const Ranking> votes, int m, const VotingRule& rule);

/// Number of expanded votes placing each candidate in its first b positions.
std::vector<long long> approval_counts(std::span<const Ranking> votes, int m, int b);

/// Smallest b with some candidate in the first b positions of a strict majority.
int bucklin_round(std::span<const Ranking> votes, int m);

/// Full argmax set (or Bucklin winner set), sorted by index.
std::vector<Candidate> winners(const Election& e, const VotingRule& rule);
std::vector<Candidate> winners(std::span<const Ranking> votes, int m, const VotingRule& rule);

/// Whether p is a winner (co-winner mode) or the sole winner (unique mode).
bool is_winner(Candidate p, std::span<const Ranking> votes, int m, const VotingRule& rule, WinnerMode mode);
bool is_winner(Candidate p, const Election& e, const VotingRule& rule, WinnerMode mode);

/// Winner test given a score vector; shared by the score-based solvers.
bool wins_with_scores(Candidate p, std::span<const long long> scores, WinnerMode mode);

}  // namespace swapbribery
