#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kcore {

using Vertex = std::uint32_t;
using CoreNumber = std::uint32_t;

/// Canonical 64-bit key of an undirected edge: (min << 32) | max.
constexpr std::uint64_t edge_key(Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

constexpr std::pair<Vertex, Vertex> edge_from_key(std::uint64_t key) noexcept {
  return {static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu)};
}

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph in CSR form.
///
/// Vertices are 0..n-1. Neighbor lists are sorted ascending; the edge list
/// holds each edge once as (u, v) with u < v, sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Self-loops and duplicates (in either
  /// orientation) are dropped. Throws std::invalid_argument when an endpoint
  /// is >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
};

/// Vertex subset together with the subgraph it induces. `graph` uses local
/// ids: local vertex i corresponds to `vertices[i]`.
struct InducedSubgraph {
  std::vector<Vertex> vertices;
  Graph graph;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// ---------------------------------------------------------------------------
// Edge-list and event ingestion

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct LoadOptions {
  /// Lower bound on n, for trailing isolated vertices.
  std::optional<std::size_t> num_vertices;
  /// Honor a SNAP "# Nodes: N" header comment as a lower bound on n.
  bool honor_header = false;
};

struct LoadResult {
  Graph graph;
  std::size_t lines_read = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Parses "u v" lines (any whitespace); '#' lines and blank lines are skipped.
LoadResult load_edge_list(std::istream& in, const LoadOptions& options = {});
LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options = {});

enum class EventKind : std::uint8_t { kInsert, kDelete };

struct EdgeEvent {
  EventKind kind;
  Vertex u;
  Vertex v;
};

/// Parses "+ u v" / "- u v" lines. Self-loop events are rejected.
std::vector<EdgeEvent> load_events(std::istream& in);
std::vector<EdgeEvent> load_events_file(const std::string& path);

}  // namespace kcore
