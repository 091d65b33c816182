#include "kcore/peeling.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcore {

PartialLabels exclusive_coreness_labeling(const Graph& h, std::span<const Vertex> protected_set) {
  std::vector<char> mask(h.num_vertices(), 0);
  for (Vertex v : protected_set) {
    if (v >= h.num_vertices()) {
      throw std::invalid_argument("protected vertex " + std::to_string(v) + " not in graph");
    }
    mask[v] = 1;
  }
  auto peel = exclusive_peel(h, [&](Vertex v) { return mask[v] != 0; });
  PartialLabels out(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (!mask[v]) out[v] = peel.label[v];
  }
  return out;
}

InducedSubgraph kcore_subgraph(const Graph& g, CoreNumber k) {
  const CoreLabels core = peel_coreness(g);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (core[v] >= k) members.push_back(v);
  }
  return induced_subgraph(g, members);
}

bool check_approx_kcore(const Graph& g, std::span<const Vertex> candidate, CoreNumber k,
                        double epsilon) {
  std::vector<char> in_h(g.num_vertices(), 0);
  for (Vertex v : candidate) {
    if (v >= g.num_vertices()) throw std::invalid_argument("candidate vertex out of range");
    in_h[v] = 1;
  }
  const CoreLabels core = peel_coreness(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (core[v] >= k && !in_h[v]) return false;
  }
  const double bound = (1.0 - epsilon) * static_cast<double>(k);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!in_h[v]) continue;
    std::size_t inner = 0;
    for (Vertex w : g.neighbors(v)) inner += in_h[w] ? 1 : 0;
    if (static_cast<double>(inner) < bound) return false;
  }
  return true;
}

ProbeResult threshold_probe_rounds(const Graph& g, CoreNumber d) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> doomed;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < d) doomed.push_back(v);
  }
  std::vector<char> queued(n, 0);
  for (Vertex v : doomed) queued[v] = 1;

  ProbeResult result;
  std::vector<Vertex> next;
  while (!doomed.empty()) {
    ++result.rounds;
    for (Vertex v : doomed) alive[v] = 0;
    next.clear();
    for (Vertex v : doomed) {
      for (Vertex w : g.neighbors(v)) {
        if (!alive[w]) continue;
        if (--degree[w] < d && !queued[w]) {
          queued[w] = 1;
          next.push_back(w);
        }
      }
    }
    doomed.swap(next);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) result.survivors.push_back(v);
  }
  return result;
}

CoreLabels brute_force_coreness_exhaustive(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 14) throw std::invalid_argument("exhaustive coreness limited to n <= 14");
  std::vector<std::uint32_t> neighbor_mask(n, 0);
  for (const Edge& e : g.edges()) {
    neighbor_mask[e.u] |= 1u << e.v;
    neighbor_mask[e.v] |= 1u << e.u;
  }
  CoreLabels best(n, 0);
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    int min_degree = static_cast<int>(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (s & (1u << v)) min_degree = std::min(min_degree, std::popcount(neighbor_mask[v] & s));
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (s & (1u << v)) best[v] = std::max<CoreNumber>(best[v], min_degree);
    }
  }
  return best;
}

CoreLabels brute_force_coreness_fixpoint(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CoreLabels core(n, 0);
  std::vector<char> alive(n);
  for (CoreNumber k = 1;; ++k) {
    std::fill(alive.begin(), alive.end(), 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        CoreNumber inner = 0;
        for (const Edge& e : g.edges()) {
          if ((e.u == v && alive[e.v]) || (e.v == v && alive[e.u])) ++inner;
        }
        if (inner < k) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v]) {
        core[v] = k;
        any = true;
      }
    }
    if (!any) break;
  }
  return core;
}

}  // namespace kcore
