#pragma once

// Undirected simple graphs with an optional vertex coloring.

#include <utility>
#include <vector>

namespace swapbribery {

class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// Vertices 0..vertex_count-1, no edges, every vertex uncolored (-1).
  explicit ColoredGraph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Throws DomainError on loops, duplicates or out-of-range endpoints.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u * n_ + v] != 0; }
  /// Edges as (u, v) with u < v, in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Color in 0..class_count-1, or -1.
  void set_color(int v, int color);
  int color(int v) const { return color_.at(v); }
  /// Declared number of classes; grows with set_color.
  int class_count() const { return classes_; }
  void set_class_count(int k);
  std::vector<int> members(int color) const;

  /// Every vertex colored and no edge inside a class.
  bool is_properly_colored() const;
  /// Pairwise adjacent, one vertex from each class 0..k-1 in order.
  bool is_multicolored_clique(const std::vector<int>& vertices) const;
  bool is_clique(const std::vector<int>& vertices) const;

 private:
  int n_ = 0;
  int classes_ = 0;
  std::vector<char> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> color_;
};

}  // namespace swapbribery
