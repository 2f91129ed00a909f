#include "swapbribery/graph.hpp"

#include <algorithm>
#include <string>

#include "swapbribery/errors.hpp"

namespace swapbribery {

ColoredGraph::ColoredGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  color_.assign(n_, -1);
}

void ColoredGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

void ColoredGraph::set_color(int v, int color) {
  if (v < 0 || v >= n_) throw DomainError("colored vertex out of range");
  if (color < 0) throw DomainError("negative color");
  color_[v] = color;
  classes_ = std::max(classes_, color + 1);
}

void ColoredGraph::set_class_count(int k) {
  if (k < 0) throw DomainError("negative class count");
  for (int c : color_)
    if (c >= k) throw DomainError("class count below a used color");
  classes_ = k;
}

std::vector<int> ColoredGraph::members(int color) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (color_[v] == color) out.push_back(v);
  return out;
}

bool ColoredGraph::is_properly_colored() const {
  for (int c : color_)
    if (c < 0) return false;
  for (auto [u, v] : edges_)
    if (color_[u] == color_[v]) return false;
  return true;
}

bool ColoredGraph::is_clique(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= n_) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

bool ColoredGraph::is_multicolored_clique(const std::vector<int>& vertices) const {
  if (static_cast<int>(vertices.size()) != classes_) return false;
  for (int i = 0; i < classes_; ++i)
    if (vertices[i] < 0 || vertices[i] >= n_ || color_[vertices[i]] != i) return false;
  return is_clique(vertices);
}

}  // namespace swapbribery
