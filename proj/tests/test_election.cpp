#include "doctest.h"
#include "support.hpp"
#include "swapbribery/errors.hpp"

using namespace swapbribery;
using fixtures::by_names;

TEST_CASE("rank_of reads 1-based positions") {
  std::vector<std::string> roster{"c1", "c2", "c3", "c4", "p"};
  Ranking v = by_names(roster, {"c1", "c2", "p", "c4", "c3"});
  Ranking u = by_names(roster, {"c1", "c2", "c3", "p", "c4"});
  CHECK(rank_of(4, v) == 3);
  CHECK(rank_of(v[0], v) == 1);
  CHECK(rank_of(3, u) == 5);
  CHECK_THROWS_AS(rank_of(7, v), DomainError);
}

TEST_CASE("ranking must be a permutation") {
  CHECK_THROWS_AS(Ranking({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Ranking({0, 3}), DomainError);
  CHECK_NOTHROW(Ranking({2, 0, 1}));
}

TEST_CASE("election validation") {
  CHECK_THROWS_AS(Election({"a", "a"}, {{Ranking::identity(2), 1}}), DomainError);
  CHECK_THROWS_AS(Election({"a", "b"}, {}), DomainError);
  CHECK_THROWS_AS(Election({"a", "b"}, {{Ranking::identity(2), 0}}), DomainError);
  CHECK_THROWS_AS(Election({"a", "b"}, {{Ranking::identity(3), 1}}), DomainError);
  Election e({"a", "b", "c"}, {{Ranking::identity(3), 2}, {Ranking({2, 1, 0}), 3}});
  CHECK(e.vote_count() == 5);
  CHECK(e.line_of(0) == 0);
  CHECK(e.line_of(1) == 0);
  CHECK(e.line_of(2) == 1);
  CHECK(e.line_of(4) == 1);
  CHECK(e.expand().line_count() == 5);
}

TEST_CASE("scores under k-approval and scoring vectors") {
  auto inst = fixtures::figure_one();
  auto s = scores(inst.election, VotingRule::approval(2));
  CHECK(s == std::vector<long long>{2, 2, 0, 0, 0});
  CHECK(score(0, inst.election, VotingRule::approval(2)) == 2);

  Election single({"a", "b", "c"}, {{Ranking::identity(3), 1}});
  CHECK(score(1, single, VotingRule::scoring({2, 1, 0})) == 1);
  CHECK(score(2, single, VotingRule::approval(2)) == 0);
  CHECK_THROWS_AS(score(0, single, VotingRule::bucklin()), UnsupportedRule);
}

TEST_CASE("rule validation") {
  CHECK_THROWS(VotingRule::approval(0));
  CHECK_THROWS(VotingRule::scoring({1, 2}));
  CHECK_THROWS(VotingRule::approval(4).validate(3));
  CHECK_THROWS(VotingRule::scoring({1, 0}).validate(3));
  CHECK_THROWS_AS(VotingRule::bucklin().k(), UnsupportedRule);
}

TEST_CASE("winners") {
  Election single({"a", "b", "c"}, {{Ranking::identity(3), 1}});
  CHECK(winners(single, VotingRule::approval(1)) == std::vector<Candidate>{0});

  CHECK(winners(fixtures::figure_one().election, VotingRule::approval(2)) == std::vector<Candidate>{0, 1});

  Election three({"a", "b", "c"}, {{Ranking({0, 1, 2}), 1}, {Ranking({1, 0, 2}), 1}, {Ranking({2, 0, 1}), 1}});
  auto votes = three.expanded();
  CHECK(bucklin_round(votes, 3) == 2);
  CHECK(winners(three, VotingRule::bucklin()) == std::vector<Candidate>{0});
  CHECK(is_winner(0, three, VotingRule::bucklin(), WinnerMode::unique));
  CHECK_FALSE(is_winner(1, three, VotingRule::bucklin(), WinnerMode::co_winner));
}

TEST_CASE("score totals and multiplicity splitting") {
  Election e({"a", "b", "c", "d"}, {{Ranking({3, 1, 0, 2}), 3}, {Ranking({0, 2, 1, 3}), 2}});
  for (int k = 1; k <= 4; ++k) {
    auto s = scores(e, VotingRule::approval(k));
    long long total = 0;
    for (auto x : s) total += x;
    CHECK(total == static_cast<long long>(e.vote_count()) * k);
  }
  for (auto rule : {VotingRule::approval(2), VotingRule::scoring({3, 2, 2, 0}), VotingRule::bucklin()})
    CHECK(winners(e, rule) == winners(e.expand(), rule));
}

TEST_CASE("bucklin winners reach the majority and none earlier") {
  Election e({"a", "b", "c", "d"}, {{Ranking({3, 1, 0, 2}), 1}, {Ranking({0, 2, 1, 3}), 1}, {Ranking({2, 1, 3, 0}), 1}});
  auto votes = e.expanded();
  int b = bucklin_round(votes, 4);
  long long majority = e.vote_count() / 2 + 1;
  auto at_b = approval_counts(votes, 4, b);
  for (Candidate w : winners(e, VotingRule::bucklin())) CHECK(at_b[w] >= majority);
  if (b > 1)
    for (auto c : approval_counts(votes, 4, b - 1)) CHECK(c < majority);
}
