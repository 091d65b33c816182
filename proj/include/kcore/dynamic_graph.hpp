#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

/// Mutable undirected simple graph over a fixed vertex set. Neighbor lists
/// are unordered; membership tests scan the shorter endpoint list.
class DynamicGraph {
 public:
  DynamicGraph() = default;
  explicit DynamicGraph(std::size_t n) : adjacency_(n) {}

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const Vertex other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
  }

  /// Returns false (and leaves the graph unchanged) if the edge exists.
  bool add_edge(Vertex u, Vertex v) {
    if (has_edge(u, v)) return false;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++num_edges_;
    return true;
  }

  /// Returns false if the edge is absent.
  bool remove_edge(Vertex u, Vertex v) {
    if (!erase_one(adjacency_[u], v)) return false;
    erase_one(adjacency_[v], u);
    --num_edges_;
    return true;
  }

  /// Sorted canonical edge list, for snapshots and comparisons.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
      for (Vertex w : adjacency_[u]) {
        if (u < w) out.push_back({u, w});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static bool erase_one(std::vector<Vertex>& list, Vertex x) {
    auto it = std::find(list.begin(), list.end(), x);
    if (it == list.end()) return false;
    *it = list.back();
    list.pop_back();
    return true;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

}  // namespace kcore
