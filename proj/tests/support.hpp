#pragma once

// Shared fixtures and independent reference computations for the tests.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "swapbribery/graph.hpp"
#include "swapbribery/swap.hpp"

namespace fixtures {

using namespace swapbribery;

inline Ranking by_names(const std::vector<std::string>& roster, const std::vector<std::string>& order) {
  std::vector<Candidate> out;
  for (const auto& n : order) out.push_back(static_cast<Candidate>(std::find(roster.begin(), roster.end(), n) - roster.begin()));
  return Ranking(out);
}

/// Unit-cost k-approval instance, one line per listed order.
inline BriberyInstance make_instance(const std::vector<std::string>& roster, const std::vector<std::vector<std::string>>& orders,
                                     int k, const std::string& preferred, Rational budget = 0) {
  std::vector<Vote> votes;
  for (const auto& o : orders) votes.push_back({by_names(roster, o), 1});
  BriberyInstance inst;
  inst.election = Election(roster, votes);
  inst.rule = VotingRule::approval(k);
  inst.preferred = *inst.election.find(preferred);
  inst.costs = SwapCostFunction(inst.election.line_count());
  inst.budget = budget;
  return inst;
}

/// The two-vote example with v = (c1,c2,p,c4,c3) and u = (c1,c2,c3,p,c4).
inline BriberyInstance figure_one(Rational budget = 3) {
  return make_instance({"c1", "c2", "c3", "c4", "p"}, {{"c1", "c2", "p", "c4", "c3"}, {"c1", "c2", "c3", "p", "c4"}}, 2,
                       "p", budget);
}

/// Cheapest path from v to target in the graph of all rankings, one arc per
/// adjacent swap priced by `costs`. Dijkstra over m! nodes.
inline Rational permutation_graph_distance(const Ranking& v, const Ranking& target, const PairCosts& costs) {
  using Key = std::vector<Candidate>;
  std::map<Key, Rational> dist;
  using Item = std::pair<Rational, Key>;
  auto later = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  dist[v.order()] = 0;
  queue.push({0, v.order()});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    if (u == target.order()) return d;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      Key w = u;
      std::swap(w[i], w[i + 1]);
      Rational nd = d + costs(u[i], u[i + 1]);
      auto it = dist.find(w);
      if (it == dist.end() || nd < it->second) {
        dist[w] = nd;
        queue.push({nd, w});
      }
    }
  }
  return -1;
}

/// k classes of `class_size` vertices (vertex v in class v % k), random
/// cross-class edges, and a planted multicolored clique returned per class.
inline std::pair<ColoredGraph, std::vector<int>> planted_clique_graph(int k, int class_size, double density,
                                                                      std::mt19937_64& rng) {
  const int n = k * class_size;
  std::vector<int> clique(k);
  for (int i = 0; i < k; ++i) clique[i] = i + k * static_cast<int>(rng() % class_size);
  std::bernoulli_distribution coin(density);
  ColoredGraph g(n);
  for (int v = 0; v < n; ++v) g.set_color(v, v % k);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (u % k == v % k) continue;
      bool planted = std::find(clique.begin(), clique.end(), u) != clique.end() &&
                     std::find(clique.begin(), clique.end(), v) != clique.end();
      if (coin(rng) || planted) g.add_edge(u, v);
    }
  return {g, clique};
}

/// Whether some k vertices are pairwise adjacent, by trying every subset
/// against a plain edge list.
inline bool has_clique(int n, const std::vector<std::pair<int, int>>& edges, int k) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !adj[u][v]) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace fixtures
