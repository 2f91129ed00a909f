#include <random>

#include "doctest.h"
#include "support.hpp"
#include "swapbribery/errors.hpp"

using namespace swapbribery;
using fixtures::by_names;

TEST_CASE("apply_swaps") {
  Ranking v({0, 1, 2});
  std::vector<Swap> one{{0, 0, 1}};
  CHECK(apply_swaps(v, one) == Ranking({1, 0, 2}));
  CHECK(apply_swaps(v, {}) == v);

  Ranking w({0, 1, 2, 3});
  std::vector<Swap> two{{0, 0, 1}, {0, 2, 3}};
  std::vector<Swap> two_rev{{0, 2, 3}, {0, 0, 1}};
  CHECK(apply_swaps(w, two) == Ranking({1, 0, 3, 2}));
  CHECK(apply_swaps(w, two_rev) == Ranking({1, 0, 3, 2}));

  std::vector<Swap> bad{{0, 0, 2}};
  CHECK_THROWS_AS(apply_swaps(v, bad), AdmissibilityError);
  // a over b then a over c, and b over c: full reversal
  std::vector<Swap> rev{{0, 1, 2}, {0, 0, 1}, {0, 0, 2}};
  CHECK(apply_swaps(v, rev) == Ranking({2, 1, 0}));
}

TEST_CASE("bubble_swaps realizes the target") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Candidate> a{0, 1, 2, 3, 4}, b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Ranking v(a), t(b);
    auto swaps = bubble_swaps(v, t);
    CHECK(static_cast<long long>(swaps.size()) == kendall_tau(v, t));
    CHECK(apply_swaps(v, swaps) == t);
  }
}

TEST_CASE("transform_cost") {
  VoteCosts table;
  Rational one = 1;
  PairCosts unit_costs(table, one);
  Ranking v({0, 1, 2});
  CHECK(transform_cost(v, v, unit_costs) == 0);
  CHECK(transform_cost(v, Ranking({2, 1, 0}), unit_costs) == 3);

  VoteCosts priced;
  priced.set(0, 1, 2);
  priced.set(0, 2, 5);
  priced.set(1, 2, 7);
  PairCosts pc(priced, one);
  CHECK(transform_cost(v, Ranking({1, 2, 0}), pc) == 7);
  CHECK(fixtures::permutation_graph_distance(v, Ranking({1, 2, 0}), pc) == 7);
}

TEST_CASE("transform_cost matches the permutation graph and is monotone") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 9), den(1, 4);
  Rational fallback = 1;
  for (int trial = 0; trial < 40; ++trial) {
    VoteCosts table;
    for (Candidate a = 0; a < 4; ++a)
      for (Candidate b = 0; b < 4; ++b)
        if (a != b) table.set(a, b, make_rational(num(rng), den(rng)));
    std::vector<Candidate> x{0, 1, 2, 3}, y = x;
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(y.begin(), y.end(), rng);
    PairCosts pc(table, fallback);
    Rational c = transform_cost(Ranking(x), Ranking(y), pc);
    CHECK(c == fixtures::permutation_graph_distance(Ranking(x), Ranking(y), pc));

    VoteCosts raised = table;
    raised.set(x[0], x[1], pc(x[0], x[1]) + 3);
    CHECK(transform_cost(Ranking(x), Ranking(y), PairCosts(raised, fallback)) >= c);
  }
}

TEST_CASE("unit transform_cost is the Kendall tau distance") {
  VoteCosts table;
  Rational one = 1;
  std::vector<Candidate> x{0, 1, 2, 3, 4};
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto y = x;
    std::shuffle(y.begin(), y.end(), rng);
    CHECK(transform_cost(Ranking(x), Ranking(y), PairCosts(table, one)) == to_rational(kendall_tau(Ranking(x), Ranking(y))));
  }
}

TEST_CASE("move_to_top_cost") {
  std::vector<std::string> roster{"c1", "c2", "c3", "c4", "p"};
  Ranking v = by_names(roster, {"c1", "c2", "p", "c4", "c3"});
  VoteCosts table;
  Rational one = 1;
  PairCosts pc(table, one);
  std::vector<Candidate> top{0, 1}, mixed{0, 4};
  CHECK(move_to_top_cost(v, top, 2, pc) == 0);
  CHECK(move_to_top_cost(v, mixed, 2, pc) == 1);
  Ranking w({0, 1, 2, 3});
  std::vector<Candidate> cd{2, 3};
  CHECK(move_to_top_cost(w, cd, 2, pc) == 4);
  CHECK_THROWS_AS(move_to_top_cost(w, cd, 3, pc), DomainError);
}

TEST_CASE("move_to_top_cost is the cheapest ranking with that top set") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(0, 6);
  Rational fallback = 1;
  for (int trial = 0; trial < 30; ++trial) {
    VoteCosts table;
    for (Candidate a = 0; a < 5; ++a)
      for (Candidate b = 0; b < 5; ++b)
        if (a != b) table.set(a, b, num(rng));
    PairCosts pc(table, fallback);
    std::vector<Candidate> x{0, 1, 2, 3, 4};
    std::shuffle(x.begin(), x.end(), rng);
    Ranking v(x);
    std::vector<Candidate> chosen{x[4], x[1]};
    std::sort(chosen.begin(), chosen.end());
    std::optional<Rational> best;
    std::vector<Candidate> perm{0, 1, 2, 3, 4};
    do {
      std::vector<Candidate> head{perm[0], perm[1]};
      std::sort(head.begin(), head.end());
      if (head != chosen) continue;
      Rational c = transform_cost(v, Ranking(perm), pc);
      if (!best || c < *best) best = c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(move_to_top_cost(v, chosen, 2, pc) == *best);
    CHECK(transform_cost(v, move_to_top(v, chosen), pc) == *best);
  }
}

TEST_CASE("cost tables") {
  VoteCosts t;
  CHECK_THROWS_AS(t.set(0, 1, -1), DomainError);
  CHECK_THROWS_AS(t.set(0, 0, 1), DomainError);
  t.set_symmetric(0, 1, Rational(3, 2));
  Rational fb = 1;
  CHECK(t.cost(1, 0, fb) == Rational(3, 2));
  CHECK(t.cost(0, 2, fb) == 1);
  t.set_default(Rational(5));
  CHECK(t.cost(0, 2, fb) == 5);
}

TEST_CASE("verify_bribery on the two-vote example") {
  auto inst = fixtures::figure_one(3);
  std::vector<std::string> roster = inst.election.names();
  Bribery b{{by_names(roster, {"c1", "p", "c2", "c4", "c3"}), by_names(roster, {"c1", "p", "c2", "c3", "c4"})}};
  auto report = verify_bribery(inst, b);
  CHECK(report.cost == 3);
  CHECK(report.preferred_wins);
  CHECK(report.is_solution());

  inst.budget = 2;
  CHECK_FALSE(verify_bribery(inst, b).is_solution());

  auto already = fixtures::make_instance({"a", "p"}, {{"p", "a"}}, 1, "p", 0);
  auto id = verify_bribery(already, already.identity_bribery());
  CHECK(id.cost == 0);
  CHECK(id.is_solution());
  CHECK_THROWS_AS(verify_bribery(inst, Bribery{{Ranking::identity(5)}}), DomainError);
}

TEST_CASE("cost range and equality use defaults and overrides") {
  auto inst = fixtures::figure_one();
  CHECK(all_costs_equal(inst, 1));
  inst.costs.line(1).set(0, 1, 2);
  CHECK_FALSE(all_costs_equal(inst, 1));
  auto [lo, hi] = cost_range(inst);
  CHECK(lo == 1);
  CHECK(hi == 2);
  inst.costs.line(0).set_default(Rational(1, 2));
  CHECK(cost_range(inst).first == Rational(1, 2));
}
