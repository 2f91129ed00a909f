// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Corpora are seeded and fixed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "support.hpp"
#include "swapbribery/colorcoding.hpp"
#include "swapbribery/kernel.hpp"
#include "swapbribery/oracle.hpp"
#include "swapbribery/reductions.hpp"
#include "swapbribery/rule_ilp.hpp"
#include "swapbribery/uniform.hpp"

using namespace swapbribery;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& check) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
  std::fflush(stdout);
}

int pick(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }

BriberyInstance random_instance(std::mt19937_64& rng, int m, int n, int k, CostModel costs, Rational budget,
                                WinnerMode mode = WinnerMode::co_winner) {
  RandomSpec spec{.m = m, .n = n, .k = k, .costs = std::move(costs), .budget = std::move(budget), .mode = mode,
                  .seed = rng()};
  return generate_random(spec);
}

CostModel mixed_model(int i) {
  switch (i % 3) {
    case 0: return CostModel::unit();
    case 1: return CostModel::two_valued(1, 2, 0.5);
    default: return CostModel::uniform_range(0, 3);
  }
}

const OracleOptions pruned{.cap = 1e7, .prune_at_budget = true};

Verdict flow_matches_oracle() {
  std::mt19937_64 rng(101);
  const int total = 500;
  int mismatches = 0;
  for (int i = 0; i < total; ++i) {
    int k = 1 + i % 3;
    int m = pick(rng, k, 6), n = pick(rng, 1, 3);
    auto inst = random_instance(rng, m, n, k, CostModel::unit(), pick(rng, 0, 4),
                                i % 4 == 3 ? WinnerMode::unique : WinnerMode::co_winner);
    auto flow = solve_uniform(inst);
    auto brute = brute_topk(inst);
    if (flow.decision != brute.decision || flow.cost != brute.cost) ++mismatches;
  }
  return {mismatches == 0, std::to_string(total) + " instances, " + std::to_string(mismatches) + " mismatches"};
}

Verdict figure_one_check() {
  auto inst = fixtures::figure_one(3);
  auto brute = brute_topk(inst);
  auto votes = inst.election.expanded();
  auto net = build_score_network(votes, 5, 2, inst.preferred, 2);
  Candidate c2 = *inst.election.find("c2"), c4 = *inst.election.find("c4");
  std::optional<Rational> arc;
  for (const auto& t : net.transfers)
    if (t.vote == 1 && t.from == c2 && t.to == c4) arc = net.network.arc(t.arc).cost;
  bool ok = brute.cost && *brute.cost == 3 && arc && *arc == 3;
  return {ok, "optimal cost " + (brute.cost ? to_string(*brute.cost) : "none") + ", w(a_{u,c2} a'_{u,c4}) = " +
                  (arc ? to_string(*arc) : "missing")};
}

Verdict approximation_bound() {
  std::mt19937_64 rng(202);
  const int total = 200;
  int violations = 0;
  for (int i = 0; i < total; ++i) {
    int k = pick(rng, 1, 3);
    int m = pick(rng, k + 1, 6), n = pick(rng, 1, 3);
    auto inst = random_instance(rng, m, n, k, CostModel::two_valued(1, 2, 0.5), pick(rng, 0, 6));
    auto approx = approx_delta(inst, Rational(2));
    auto brute = brute_topk(inst);
    if (!approx.witness || !brute.cost) {
      ++violations;
      continue;
    }
    auto rep = verify_bribery(inst, *approx.witness);
    if (!rep.preferred_wins || rep.cost != approx.cost || approx.cost > 2 * *brute.cost) ++violations;
  }
  return {violations == 0, std::to_string(total) + " instances, " + std::to_string(violations) + " violations"};
}

Verdict color_coding_completeness() {
  std::mt19937_64 rng(303);
  const int total = 300;
  int mismatches = 0, yes = 0, random_hits = 0;
  for (int i = 0; i < total; ++i) {
    int k = pick(rng, 1, 2);
    int m = pick(rng, k + 1, 6), n = pick(rng, 1, 2);
    auto inst = random_instance(rng, m, n, k, mixed_model(i), pick(rng, 0, 3));
    bool expected = brute_topk(inst, pruned).decision;
    auto exhaustive = solve_colorcoding(inst, {.mode = ColorMode::exhaustive});
    if (exhaustive.decision != expected) ++mismatches;
    if (expected) {
      ++yes;
      auto random = solve_colorcoding(inst, {.mode = ColorMode::random, .seed = 7});
      random_hits += random.decision;
    }
  }
  bool ok = mismatches == 0 && random_hits * 100 >= 95 * yes;
  return {ok, std::to_string(total) + " instances, " + std::to_string(mismatches) + " exhaustive mismatches; random mode " +
                  std::to_string(random_hits) + "/" + std::to_string(yes) + " yes-instances"};
}

Verdict kernel_equivalence() {
  std::mt19937_64 rng(404);
  const int total = 300;
  int mismatches = 0, bound_violations = 0, simple_mismatches = 0;
  for (int i = 0; i < total; ++i) {
    int k = pick(rng, 1, 3);
    int m = pick(rng, k, 6), n = pick(rng, 1, 2);
    const long long beta = pick(rng, 0, 2);
    CostModel model = i % 3 == 0 ? CostModel::unit() : i % 3 == 1 ? CostModel::two_valued(1, 2, 0.5) : CostModel::uniform_range(1, 3);
    auto inst = random_instance(rng, m, n, k, model, to_rational(beta));
    bool expected = brute_topk(inst, pruned).decision;

    auto kernel = kernelize(inst);
    const long long nb = 2LL * n * beta;
    if (kernel.instance.vote_count() > (nb + 3) * n || kernel.instance.candidate_count() > n + (nb + 2) * (nb + 1))
      ++bound_violations;
    if (brute_topk(kernel.instance, pruned).decision != expected) ++mismatches;

    auto simple = simple_truncation_kernel(inst);
    if (simple.candidate_count() > (k + beta) * n + 1) ++bound_violations;
    if (brute_topk(simple, pruned).decision != expected) ++simple_mismatches;
  }
  bool ok = mismatches == 0 && simple_mismatches == 0 && bound_violations == 0;
  return {ok, std::to_string(total) + " instances, " + std::to_string(mismatches) + " kernel mismatches, " +
                  std::to_string(simple_mismatches) + " truncation mismatches, " + std::to_string(bound_violations) +
                  " bound violations"};
}

bool bucklin_description_exhaustive() {
  for (WinnerMode mode : {WinnerMode::co_winner, WinnerMode::unique})
    for (int n = 1; n <= 4; ++n) {
      auto d = describe_rule(VotingRule::bucklin(), 3, n, mode);
      std::vector<long long> profile(6, 0);
      bool ok = true;
      auto walk = [&](auto&& self, int from, int left) -> void {
        if (!ok) return;
        if (left == 0) {
          std::vector<Ranking> votes;
          for (int i = 0; i < 6; ++i)
            for (long long c = 0; c < profile[i]; ++c) votes.emplace_back(d.rankings[i]);
          // label 0 is the preferred candidate
          auto w = winners(votes, 3, VotingRule::bucklin());
          bool wins = std::find(w.begin(), w.end(), 0) != w.end() && (mode == WinnerMode::co_winner || w.size() == 1);
          if (description_elects(d, profile) != wins) ok = false;
          return;
        }
        for (int i = from; i < 6; ++i) {
          ++profile[i];
          self(self, i, left - 1);
          --profile[i];
        }
      };
      walk(walk, 0, n);
      if (!ok) return false;
    }
  return true;
}

BriberyInstance random_bucklin(std::mt19937_64& rng, int m, int n) {
  auto inst = random_instance(rng, m, n, 1, rng() % 2 ? CostModel::unit() : CostModel::uniform_range(1, 3), pick(rng, 0, 3));
  inst.rule = VotingRule::bucklin();
  if (rng() % 3 == 0) inst.mode = WinnerMode::unique;
  return inst;
}

Verdict ilp_matches_oracle() {
  std::mt19937_64 rng(505);
  int approval_mismatches = 0, bucklin_mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    int m = pick(rng, 2, 4), n = pick(rng, 1, 3);
    int k = pick(rng, 1, m - 1);
    auto inst = random_instance(rng, m, n, k, mixed_model(i), pick(rng, 0, 3),
                                i % 3 == 2 ? WinnerMode::unique : WinnerMode::co_winner);
    if (solve_ilp(inst).decision != brute_topk(inst).decision) ++approval_mismatches;
  }
  for (int i = 0; i < 100; ++i) {
    auto inst = random_bucklin(rng, pick(rng, 2, 3), pick(rng, 1, 3));
    if (solve_ilp(inst).decision != brute_rankings(inst).decision) ++bucklin_mismatches;
  }
  bool description = bucklin_description_exhaustive();
  bool ok = approval_mismatches == 0 && bucklin_mismatches == 0 && description;
  return {ok, "200 k-approval instances, " + std::to_string(approval_mismatches) + " mismatches; 100 Bucklin instances, " +
                  std::to_string(bucklin_mismatches) + " mismatches; Bucklin description over all m = 3, n <= 4 profiles " +
                  (description ? "exact" : "WRONG")};
}

Verdict clique_witness_exact() {
  std::mt19937_64 rng(606);
  const int total = 24;
  int bad_cost = 0, bad_scores = 0, bad_audit = 0;
  for (int i = 0; i < total; ++i) {
    int k = 2 + i % 2;
    auto [graph, clique] = fixtures::planted_clique_graph(k, pick(rng, 1, 3), 0.35, rng);
    auto gadget = build_clique_gadget(graph, 1);
    if (!clique_gadget_audit(gadget).empty()) ++bad_audit;
    auto witness = clique_witness_bribery(graph, clique, gadget);
    auto rep = verify_bribery(gadget.instance, witness);
    if (rep.cost != k * k * k + 10 * k * k) ++bad_cost;
    auto after = scores(witness.targets, gadget.instance.candidate_count(), gadget.instance.rule);
    if (!rep.preferred_wins || after[gadget.instance.preferred] != gadget.K) ++bad_scores;
  }
  bool ok = bad_cost == 0 && bad_scores == 0 && bad_audit == 0;
  return {ok, std::to_string(total) + " graphs (k = 2, 3), " + std::to_string(bad_cost) + " cost mismatches, " +
                  std::to_string(bad_scores) + " score failures, " + std::to_string(bad_audit) + " audit failures"};
}

Verdict single_vote_equivalence() {
  std::mt19937_64 rng(707);
  int graphs = 0, decision_mismatches = 0, cost_mismatches = 0, yes = 0;
  for (int N = 1; N <= 7; ++N)
    for (int round = 0; round < 8; ++round) {
      ColoredGraph g(N);
      double density = 0.2 + 0.1 * round;
      std::bernoulli_distribution coin(density);
      for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
          if (coin(rng)) g.add_edge(u, v);
      ++graphs;
      for (int k = 1; k <= std::min(3, N); ++k) {
        auto inst = build_single_vote_clique(g, k);
        auto result = brute_topk(inst);
        bool expected = fixtures::has_clique(N, g.edges(), k);
        if (result.decision != expected) ++decision_mismatches;
        if (expected) {
          ++yes;
          if (!result.cost || *result.cost != inst.budget) ++cost_mismatches;
        }
      }
    }
  bool ok = graphs >= 50 && decision_mismatches == 0 && cost_mismatches == 0;
  return {ok, std::to_string(graphs) + " graphs x k <= 3, " + std::to_string(decision_mismatches) +
                  " decision mismatches, " + std::to_string(cost_mismatches) + " cost mismatches over " +
                  std::to_string(yes) + " yes-instances"};
}

Verdict possible_winner_round_trips() {
  std::mt19937_64 rng(808);
  int sb_mismatches = 0, pw_mismatches = 0, order_mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    int m = pick(rng, 2, 5), n = pick(rng, 1, 3);
    int k = pick(rng, 1, m - 1);
    auto inst = random_instance(rng, m, n, k, CostModel::two_valued(0, 1, 0.5), 0,
                                i % 4 == 3 ? WinnerMode::unique : WinnerMode::co_winner);
    if (possible_winner_brute(sb_to_pw(inst)) != brute_topk(inst).decision) ++sb_mismatches;
  }
  for (int i = 0; i < 200; ++i) {
    int m = pick(rng, 2, 5), n = pick(rng, 1, 3);
    PossibleWinnerInstance pw;
    for (int c = 0; c < m; ++c) pw.names.push_back("x" + std::to_string(c));
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int v = 0; v < n; ++v) pw.votes.push_back(random_partial_order(m, density(rng), rng));
    pw.rule = VotingRule::approval(pick(rng, 1, m - 1));
    pw.preferred = pick(rng, 0, m - 1);
    if (i % 4 == 3) pw.mode = WinnerMode::unique;
    auto sb = pw_to_sb(pw);
    if (brute_topk(sb).decision != possible_winner_brute(pw)) ++pw_mismatches;
    if (sb_to_pw(sb).votes != pw.votes) ++order_mismatches;
  }
  bool ok = sb_mismatches == 0 && pw_mismatches == 0 && order_mismatches == 0;
  return {ok, "200 zero-budget instances, " + std::to_string(sb_mismatches) + " mismatches; 200 partial-order instances, " +
                  std::to_string(pw_mismatches) + " mismatches, " + std::to_string(order_mismatches) +
                  " round-trip differences"};
}

Verdict transform_cost_oracle() {
  std::mt19937_64 rng(909);
  int cases = 0, mismatches = 0;
  auto random_costs = [&](int m) {
    VoteCosts table;
    for (Candidate a = 0; a < m; ++a)
      for (Candidate b = 0; b < m; ++b)
        if (a != b) table.set(a, b, make_rational(pick(rng, 0, 12), pick(rng, 1, 5)));
    return table;
  };
  const Rational fallback = 1;
  for (int m = 1; m <= 4; ++m) {
    auto table = random_costs(m);
    PairCosts costs(table, fallback);
    std::vector<Candidate> a(m);
    std::iota(a.begin(), a.end(), 0);
    do {
      std::vector<Candidate> b(m);
      std::iota(b.begin(), b.end(), 0);
      do {
        Ranking v(a), t(b);
        ++cases;
        if (transform_cost(v, t, costs) != fixtures::permutation_graph_distance(v, t, costs)) ++mismatches;
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  for (int i = 0; i < 100; ++i) {
    auto table = random_costs(5);
    PairCosts costs(table, fallback);
    std::vector<Candidate> a{0, 1, 2, 3, 4}, b{0, 1, 2, 3, 4};
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Ranking v(a), t(b);
    ++cases;
    if (transform_cost(v, t, costs) != fixtures::permutation_graph_distance(v, t, costs)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(cases) + " ranking pairs, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  report(1, "flow solver equals exhaustive search on unit costs", flow_matches_oracle);
  report(2, "two-vote example: optimum 3 and transfer arc cost 3", figure_one_check);
  report(3, "unit-cost solution within factor 2 for costs in {1,2}", approximation_bound);
  report(4, "color coding: exhaustive equals exhaustive search, random mode hit rate", color_coding_completeness);
  report(5, "kernels preserve decisions and respect size bounds", kernel_equivalence);
  report(6, "ILP solver equals exhaustive search", ilp_matches_oracle);
  report(7, "multicolored clique witness costs exactly k^3 + 10k^2", clique_witness_exact);
  report(8, "single-vote construction decides clique existence", single_vote_equivalence);
  report(9, "possible winner translations round-trip", possible_winner_round_trips);
  report(10, "transformation cost equals shortest swap path", transform_cost_oracle);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
