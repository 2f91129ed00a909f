#include "swapbribery/uniform.hpp"

#include "swapbribery/errors.hpp"

namespace swapbribery {

ScoreNetwork build_score_network(std::span<const Ranking> votes, int m, int k, Candidate preferred,
                                 int target_score, WinnerMode mode, std::span<const std::string> names) {
  const int n = static_cast<int>(votes.size());
  if (k < 1 || k > m) throw DomainError("k out of range");
  if (preferred < 0 || preferred >= m) throw DomainError("preferred candidate out of range");
  if (target_score < 1 || target_score > n) throw DomainError("target score must lie in 1..n");
  auto name = [&](Candidate c) { return names.empty() ? std::to_string(c) : names[c]; };

  ScoreNetwork net;
  net.vote_count = n;
  net.candidate_count = m;
  net.k = k;
  net.target_score = target_score;
  auto& g = net.network;

  const int s = g.add_node("s");
  const int t = g.add_node("t");
  net.junction = g.add_node("x");
  g.set_source(s);
  g.set_sink(t);

  net.top_node.assign(n, std::vector<int>(m, -1));
  net.slot_node.assign(n, std::vector<int>(m, -1));
  for (int v = 0; v < n; ++v)
    for (int pos = 0; pos < k; ++pos) {
      Candidate c = votes[v][pos];
      net.top_node[v][c] = g.add_node("a(v" + std::to_string(v + 1) + "," + name(c) + ")");
    }
  for (int v = 0; v < n; ++v)
    for (Candidate c = 0; c < m; ++c) net.slot_node[v][c] = g.add_node("a'(v" + std::to_string(v + 1) + "," + name(c) + ")");
  net.candidate_node.resize(m);
  for (Candidate c = 0; c < m; ++c) net.candidate_node[c] = g.add_node("b(" + name(c) + ")");

  for (int v = 0; v < n; ++v) {
    const Ranking& vote = votes[v];
    for (int pos = 0; pos < k; ++pos) {
      Candidate c = vote[pos];
      int a = net.top_node[v][c];
      g.add_arc(s, a, 1, 0);
      net.keep_arcs.push_back(g.add_arc(a, net.slot_node[v][c], 1, 0));
      for (int zpos = k; zpos < m; ++zpos) {
        Candidate d = vote[zpos];
        int arc = g.add_arc(a, net.slot_node[v][d], 1, zpos - pos);
        net.transfers.push_back({arc, v, c, d});
      }
    }
    for (Candidate c = 0; c < m; ++c) g.add_arc(net.slot_node[v][c], net.candidate_node[c], 1, 0);
  }
  const long long rival_cap = mode == WinnerMode::unique ? target_score - 1 : target_score;
  for (Candidate c = 0; c < m; ++c)
    if (c != preferred) net.cap_arcs.push_back(g.add_arc(net.candidate_node[c], net.junction, rival_cap, 0));
  net.preferred_arc = g.add_arc(net.candidate_node[preferred], t, target_score, 0);
  net.junction_arc = g.add_arc(net.junction, t, static_cast<long long>(n) * k - target_score, 0);
  return net;
}

Bribery extract_bribery(const ScoreNetwork& net, std::span<const Ranking> votes, const std::vector<long long>& flow) {
  const int n = net.vote_count, m = net.candidate_count, k = net.k;
  std::vector<std::vector<char>> leaving(n, std::vector<char>(m, 0)), entering(n, std::vector<char>(m, 0));
  for (const auto& tr : net.transfers) {
    if (flow.at(tr.arc) == 0) continue;
    leaving[tr.vote][tr.from] = 1;
    entering[tr.vote][tr.to] = 1;
  }
  Bribery b;
  b.targets.reserve(n);
  for (int v = 0; v < n; ++v) {
    const Ranking& vote = votes[v];
    std::vector<Candidate> order;
    order.reserve(m);
    for (int pos = 0; pos < k; ++pos)
      if (!leaving[v][vote[pos]]) order.push_back(vote[pos]);
    for (int pos = k; pos < m; ++pos)
      if (entering[v][vote[pos]]) order.push_back(vote[pos]);
    for (int pos = 0; pos < k; ++pos)
      if (leaving[v][vote[pos]]) order.push_back(vote[pos]);
    for (int pos = k; pos < m; ++pos)
      if (!entering[v][vote[pos]]) order.push_back(vote[pos]);
    b.targets.emplace_back(std::move(order));
  }
  return b;
}

namespace {

// Ignores the cost function; every swap is priced 1.
SolveResult solve_unit_priced(const BriberyInstance& instance) {
  instance.validate();
  if (!instance.rule.is_approval()) throw PreconditionError("flow solver requires k-approval");
  const int m = instance.candidate_count();
  const int n = instance.vote_count();
  const int k = instance.rule.k();
  auto votes = instance.election.expanded();

  SolveResult result;
  if (m == 1) {
    result.decision = true;
    result.cost = 0;
    result.witness = instance.identity_bribery();
    return result;
  }
  std::optional<ScoreNetwork> best_net;
  std::vector<long long> best_flow;
  for (int target = 1; target <= n; ++target) {
    auto net = build_score_network(votes, m, k, instance.preferred, target, instance.mode);
    auto flow = min_cost_max_flow(net.network);
    if (flow.value != static_cast<long long>(n) * k) continue;
    if (!result.cost || flow.cost < *result.cost) {
      result.cost = flow.cost;
      best_net = std::move(net);
      best_flow = std::move(flow.flow);
    }
  }
  if (!result.cost) return result;
  result.decision = *result.cost <= instance.budget;
  result.witness = extract_bribery(*best_net, votes, best_flow);
  return result;
}

}  // namespace

SolveResult solve_uniform(const BriberyInstance& instance) {
  if (!all_costs_equal(instance, 1)) throw PreconditionError("flow solver requires every swap to cost 1");
  return solve_unit_priced(instance);
}

ApproxResult approx_delta(const BriberyInstance& instance, std::optional<Rational> delta) {
  auto [lo, hi] = cost_range(instance);
  if (!delta) delta = hi < 1 ? Rational(1) : hi;
  if (*delta < 1) throw PreconditionError("delta must be at least 1");
  if (instance.candidate_count() > 1 && (lo < 1 || hi > *delta))
    throw PreconditionError("every swap cost must lie in [1, delta]");

  ApproxResult out;
  out.delta = *delta;
  auto unit = solve_unit_priced(instance);
  if (!unit.witness) return out;
  out.unit_cost = *unit.cost;
  out.cost = verify_bribery(instance, *unit.witness).cost;
  out.within_budget = out.cost <= instance.budget;
  out.witness = std::move(unit.witness);
  return out;
}

}  // namespace swapbribery
