#pragma once

// Min-cost max-flow on small integral-capacity networks with exact costs.

#include <string>
#include <vector>

#include "swapbribery/rational.hpp"

namespace swapbribery {

struct FlowArc {
  int from = 0;
  int to = 0;
  long long capacity = 0;
  Rational cost;
};

class FlowNetwork {
 public:
  int add_node(std::string label);
  /// Returns the arc index.
  int add_arc(int from, int to, long long capacity, Rational cost);

  void set_source(int node) { source_ = node; }
  void set_sink(int node) { sink_ = node; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int node_count() const { return static_cast<int>(labels_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::string& label(int node) const { return labels_.at(node); }
  const FlowArc& arc(int index) const { return arcs_.at(index); }
  const std::vector<FlowArc>& arcs() const { return arcs_; }

  /// Throws DomainError on negative capacity or cost, missing terminals, a
  /// source with in-arcs or a sink with out-arcs.
  void validate() const;

 private:
  std::vector<std::string> labels_;
  std::vector<FlowArc> arcs_;
  int source_ = -1;
  int sink_ = -1;
};

struct FlowResult {
  long long value = 0;
  Rational cost;
  /// Flow on each arc, by arc index.
  std::vector<long long> flow;
};

/// Maximum flow of minimum cost (successive shortest paths with potentials).
FlowResult min_cost_max_flow(const FlowNetwork& network);

/// Graphviz rendering; arcs labelled "capacity/cost", plus "flow=f" when a
/// flow is given.
std::string to_dot(const FlowNetwork& network, const std::vector<long long>* flow = nullptr);

}  // namespace swapbribery
