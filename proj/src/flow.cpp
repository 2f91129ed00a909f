#include "swapbribery/flow.hpp"

#include <limits>
#include <optional>
#include <queue>
#include <sstream>

#include "swapbribery/errors.hpp"

namespace swapbribery {

int FlowNetwork::add_node(std::string label) {
  labels_.push_back(std::move(label));
  return node_count() - 1;
}

int FlowNetwork::add_arc(int from, int to, long long capacity, Rational cost) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count()) throw DomainError("arc endpoint out of range");
  arcs_.push_back({from, to, capacity, std::move(cost)});
  return arc_count() - 1;
}

void FlowNetwork::validate() const {
  if (source_ < 0 || sink_ < 0 || source_ >= node_count() || sink_ >= node_count())
    throw DomainError("network terminals are not set");
  if (source_ == sink_) throw DomainError("source equals sink");
  for (const auto& a : arcs_) {
    if (a.capacity < 0) throw DomainError("negative arc capacity");
    if (a.cost < 0) throw DomainError("negative arc cost");
    if (a.to == source_) throw DomainError("source has an incoming arc");
    if (a.from == sink_) throw DomainError("sink has an outgoing arc");
  }
}

namespace {

struct Residual {
  int to;
  long long capacity;
  Rational cost;
  int arc;  // original arc index
  bool forward;
};

}  // namespace

FlowResult min_cost_max_flow(const FlowNetwork& network) {
  network.validate();
  const int nodes = network.node_count();
  std::vector<Residual> edges;
  std::vector<std::vector<int>> out(nodes);
  for (int i = 0; i < network.arc_count(); ++i) {
    const auto& a = network.arc(i);
    out[a.from].push_back(static_cast<int>(edges.size()));
    edges.push_back({a.to, a.capacity, a.cost, i, true});
    out[a.to].push_back(static_cast<int>(edges.size()));
    edges.push_back({a.from, 0, -a.cost, i, false});
  }

  FlowResult result;
  result.cost = 0;
  result.flow.assign(network.arc_count(), 0);
  // Costs are non-negative, so zero potentials are feasible to start with.
  std::vector<Rational> potential(nodes, 0);
  const int s = network.source(), t = network.sink();

  while (true) {
    std::vector<std::optional<Rational>> dist(nodes);
    std::vector<int> via(nodes, -1);
    std::vector<char> done(nodes, 0);
    using Item = std::pair<Rational, int>;
    auto later = [](const Item& a, const Item& b) { return a.first > b.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
    dist[s] = 0;
    queue.push({0, s});
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (int e : out[u]) {
        const auto& r = edges[e];
        if (r.capacity <= 0) continue;
        Rational nd = d + r.cost + potential[u] - potential[r.to];
        if (!dist[r.to] || nd < *dist[r.to]) {
          dist[r.to] = nd;
          via[r.to] = e;
          queue.push({nd, r.to});
        }
      }
    }
    if (!dist[t]) break;
    for (int v = 0; v < nodes; ++v)
      if (dist[v]) potential[v] += *dist[v];

    long long push = std::numeric_limits<long long>::max();
    for (int v = t; v != s; v = edges[via[v] ^ 1].to) push = std::min(push, edges[via[v]].capacity);
    for (int v = t; v != s; v = edges[via[v] ^ 1].to) {
      int e = via[v];
      edges[e].capacity -= push;
      edges[e ^ 1].capacity += push;
      result.flow[edges[e].arc] += edges[e].forward ? push : -push;
    }
    result.value += push;
  }
  for (int i = 0; i < network.arc_count(); ++i) result.cost += network.arc(i).cost * to_rational(result.flow[i]);
  return result;
}

std::string to_dot(const FlowNetwork& network, const std::vector<long long>* flow) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=LR;\n";
  for (int v = 0; v < network.node_count(); ++v) os << "  n" << v << " [label=\"" << network.label(v) << "\"];\n";
  for (int i = 0; i < network.arc_count(); ++i) {
    const auto& a = network.arc(i);
    os << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.capacity << "/" << to_string(a.cost);
    if (flow) os << " flow=" << (*flow)[i];
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace swapbribery
