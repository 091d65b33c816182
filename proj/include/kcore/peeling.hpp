#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

/// Exact coreness per vertex.
using CoreLabels = std::vector<CoreNumber>;
/// Exclusive-labeling output; vertices of the protected set have no label.
using PartialLabels = std::vector<std::optional<CoreNumber>>;

inline constexpr CoreNumber kNoLabel = std::numeric_limits<CoreNumber>::max();

template <class G>
concept AdjacencyGraph = requires(const G& g, Vertex v) {
  { g.num_vertices() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const Vertex>>;
};

struct ExclusivePeel {
  /// kNoLabel for protected vertices.
  std::vector<CoreNumber> label;
  /// Unprotected vertices in the order they were removed.
  std::vector<Vertex> removal_order;
};

/// Peeling that never removes protected vertices but counts their edges.
///
/// Repeatedly removes the minimum-degree unprotected vertex (smallest id on
/// ties) while its current degree is at most the running level, labeling it
/// with that level; otherwise the level is raised. With nothing protected
/// this is the classic core decomposition. Bucket queue keyed by current
/// degree, each bucket a min-heap on vertex id with lazy deletion.
template <AdjacencyGraph G, class IsProtected>
ExclusivePeel exclusive_peel(const G& g, IsProtected&& is_protected) {
  const std::size_t n = g.num_vertices();
  ExclusivePeel out;
  out.label.assign(n, kNoLabel);
  out.removal_order.reserve(n);

  std::vector<std::size_t> degree(n, 0);
  std::vector<char> active(n, 0);
  std::size_t max_degree = 0;
  std::size_t remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (is_protected(v)) continue;
    active[v] = 1;
    ++remaining;
    degree[v] = std::span<const Vertex>(g.neighbors(v)).size();
    max_degree = std::max(max_degree, degree[v]);
  }

  std::vector<std::vector<Vertex>> buckets(max_degree + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (active[v]) buckets[degree[v]].push_back(v);  // ascending ids form a valid min-heap
  }

  constexpr auto kHeapOrder = std::greater<Vertex>{};
  std::size_t cursor = 0;
  CoreNumber level = 0;
  while (remaining > 0) {
    // Advance to the lowest bucket holding a live entry.
    Vertex v = 0;
    for (;;) {
      auto& bucket = buckets[cursor];
      while (!bucket.empty() && (!active[bucket.front()] || degree[bucket.front()] != cursor)) {
        std::pop_heap(bucket.begin(), bucket.end(), kHeapOrder);
        bucket.pop_back();
      }
      if (!bucket.empty()) {
        v = bucket.front();
        std::pop_heap(bucket.begin(), bucket.end(), kHeapOrder);
        bucket.pop_back();
        break;
      }
      ++cursor;
    }
    level = std::max(level, static_cast<CoreNumber>(cursor));
    out.label[v] = level;
    out.removal_order.push_back(v);
    active[v] = 0;
    --remaining;
    for (Vertex w : g.neighbors(v)) {
      if (!active[w]) continue;
      const std::size_t d = --degree[w];
      auto& bucket = buckets[d];
      bucket.push_back(w);
      std::push_heap(bucket.begin(), bucket.end(), kHeapOrder);
      cursor = std::min(cursor, d);
    }
  }
  return out;
}

template <AdjacencyGraph G>
CoreLabels peel_coreness(const G& g) {
  return exclusive_peel(g, [](Vertex) { return false; }).label;
}

/// Exclusive coreness labeling with an explicit protected set. Throws
/// std::invalid_argument if a protected vertex is outside the graph.
PartialLabels exclusive_coreness_labeling(const Graph& h, std::span<const Vertex> protected_set);

/// Maximal induced subgraph of minimum degree >= k (possibly empty).
InducedSubgraph kcore_subgraph(const Graph& g, CoreNumber k);

/// True iff `candidate` contains the k-core of g and every vertex of
/// `candidate` has induced degree >= (1 - epsilon) * k inside it.
bool check_approx_kcore(const Graph& g, std::span<const Vertex> candidate, CoreNumber k,
                        double epsilon);

struct ProbeResult {
  std::size_t rounds = 0;
  std::vector<Vertex> survivors;
};

/// Synchronous threshold probing: each round deletes every vertex whose
/// current induced degree is below d, until a round deletes nothing. The
/// returned count includes only rounds that deleted at least one vertex.
ProbeResult threshold_probe_rounds(const Graph& g, CoreNumber d);

// Definition-based reference implementations, independent of the peeling
// code path above.

/// Max over vertex subsets containing v of the induced minimum degree.
/// Throws std::invalid_argument for n > 14.
CoreLabels brute_force_coreness_exhaustive(const Graph& g);

/// For each k separately: delete vertices of induced degree < k until
/// stable; coreness(v) is the largest k for which v survives.
CoreLabels brute_force_coreness_fixpoint(const Graph& g);

}  // namespace kcore
