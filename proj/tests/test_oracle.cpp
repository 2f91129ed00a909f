#include <random>

#include "doctest.h"
#include "support.hpp"
#include "swapbribery/errors.hpp"
#include "swapbribery/oracle.hpp"

using namespace swapbribery;

TEST_CASE("brute_topk on small fixed instances") {
  auto fig = fixtures::figure_one(3);
  auto r = brute_topk(fig);
  CHECK(r.decision);
  CHECK(*r.cost == 3);
  CHECK(verify_bribery(fig, *r.witness).is_solution());

  auto already = fixtures::make_instance({"a", "p"}, {{"p", "a"}}, 1, "p", 0);
  CHECK(*brute_topk(already).cost == 0);

  auto deep = fixtures::make_instance({"a", "b", "p"}, {{"a", "b", "p"}}, 1, "p", 1);
  auto d = brute_topk(deep);
  CHECK(*d.cost == 2);
  CHECK_FALSE(d.decision);
}

TEST_CASE("brute_topk errors") {
  auto fig = fixtures::figure_one();
  fig.rule = VotingRule::bucklin();
  CHECK_THROWS_AS(brute_topk(fig), DomainError);
  auto big = fixtures::figure_one();
  CHECK_THROWS_AS(brute_topk(big, {.cap = 50}), ResourceError);
}

TEST_CASE("brute_rankings agrees with brute_topk and handles Bucklin") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::string> roster{"a", "b", "c", "p"};
    std::vector<std::vector<std::string>> orders;
    for (int i = 0; i < 2; ++i) {
      auto o = roster;
      std::shuffle(o.begin(), o.end(), rng);
      orders.push_back(o);
    }
    auto inst = fixtures::make_instance(roster, orders, 1 + trial % 2, "p", trial % 4);
    for (int line = 0; line < 2; ++line) {
      Candidate a = static_cast<Candidate>(rng() % 4);
      Candidate b = static_cast<Candidate>((a + 1 + rng() % 3) % 4);
      inst.costs.line(line).set(a, b, static_cast<long>(1 + rng() % 3));
    }
    auto a = brute_topk(inst);
    auto b = brute_rankings(inst);
    CHECK(a.decision == b.decision);
    CHECK(*a.cost == *b.cost);
  }

  auto single = fixtures::make_instance({"a", "b", "p"}, {{"a", "b", "p"}}, 1, "p", 10);
  single.rule = VotingRule::bucklin();
  single.costs.line(0).set(0, 2, 4);
  auto r = brute_rankings(single);
  // p must reach the first position: pass b (1) and a (4)
  CHECK(*r.cost == 5);
  CHECK(r.witness->targets[0][0] == 2);
}

TEST_CASE("brute_topk decision is monotone in the budget") {
  auto fig = fixtures::figure_one();
  bool seen_yes = false;
  for (int b = 0; b <= 6; ++b) {
    fig.budget = b;
    bool yes = brute_topk(fig).decision;
    if (seen_yes) CHECK(yes);
    seen_yes = seen_yes || yes;
  }
  CHECK(seen_yes);
}

TEST_CASE("budget pruning reports the same in-budget optimum") {
  auto fig = fixtures::figure_one(3);
  auto pruned = brute_topk(fig, {.cap = 1e6, .prune_at_budget = true});
  CHECK(pruned.decision);
  CHECK(*pruned.cost == 3);
  fig.budget = 2;
  CHECK_FALSE(brute_topk(fig, {.cap = 1e6, .prune_at_budget = true}).decision);
}
