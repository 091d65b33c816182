#include "kcore/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace kcore {

Graph gen_hard_instance(std::size_t n) {
  if (n < 10 || n % 5 != 0) {
    throw std::invalid_argument("hard instance needs n >= 10 and n % 5 == 0");
  }
  std::vector<Edge> edges;
  const auto at = [](std::size_t x) { return static_cast<Vertex>(x); };
  for (std::size_t i = 0; i <= (n - 10) / 5; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      edges.push_back({at(5 * i + j), at(5 * i + 4)});
      edges.push_back({at(5 * i + j), at(5 * (i + 1))});
      edges.push_back({at(5 * i + j), at(5 * (i + 1) + j)});
    }
    edges.push_back({at(5 * i + 4), at(5 * (i + 1))});
  }
  for (std::size_t a = n - 5; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.push_back({at(a), at(b)});
  }
  return Graph::from_edges(n, edges);
}

namespace {

// Portable uniform double in [0, 1); std::uniform_real_distribution is not
// specified bit-exactly across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(unit(rng) * static_cast<double>(bound));
}

Graph gnp(const GnpParams& p, std::mt19937_64& rng) {
  if (p.n < 1) throw std::invalid_argument("gnp needs n >= 1");
  if (!(p.p >= 0.0 && p.p <= 1.0)) throw std::invalid_argument("gnp needs p in [0, 1]");
  std::vector<Edge> edges;
  const std::size_t n = p.n;
  if (p.p == 1.0) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph::from_edges(n, edges);
  }
  if (p.p > 0.0) {
    // Batagelj-Brandes: walk the lower triangle with geometric gaps.
    const double log_q = std::log1p(-p.p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      const double r = unit(rng);
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph regularish(const RegularishParams& p, std::mt19937_64& rng) {
  if (p.n < 1) throw std::invalid_argument("regular-ish needs n >= 1");
  if (p.degree >= p.n) throw std::invalid_argument("regular-ish needs degree < n");
  if ((p.n * p.degree) % 2 != 0) throw std::invalid_argument("regular-ish needs n*degree even");
  std::vector<Vertex> stubs;
  stubs.reserve(p.n * p.degree);
  for (Vertex v = 0; v < p.n; ++v) {
    for (std::size_t k = 0; k < p.degree; ++k) stubs.push_back(v);
  }
  for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[below(rng, i)]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return Graph::from_edges(p.n, edges);
}

Graph clique_chain(const CliqueChainParams& p, std::mt19937_64& rng) {
  if (p.count < 1 || p.min_size < 1 || p.min_size > p.max_size) {
    throw std::invalid_argument("clique-chain needs count >= 1 and 1 <= min_size <= max_size");
  }
  std::vector<Edge> edges;
  std::size_t next = 0;
  std::size_t prev_begin = 0;
  std::size_t prev_size = 0;
  for (std::size_t c = 0; c < p.count; ++c) {
    const std::size_t size = p.min_size + below(rng, p.max_size - p.min_size + 1);
    const std::size_t begin = next;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) {
        edges.push_back({static_cast<Vertex>(begin + a), static_cast<Vertex>(begin + b)});
      }
    }
    if (c > 0) {
      edges.push_back({static_cast<Vertex>(prev_begin + below(rng, prev_size)),
                       static_cast<Vertex>(begin + below(rng, size))});
    }
    prev_begin = begin;
    prev_size = size;
    next += size;
  }
  return Graph::from_edges(next, edges);
}

}  // namespace

Graph gen_synthetic(const SyntheticParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return std::visit(
      [&](const auto& p) -> Graph {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, GnpParams>) {
          return gnp(p, rng);
        } else if constexpr (std::is_same_v<P, RegularishParams>) {
          return regularish(p, rng);
        } else {
          return clique_chain(p, rng);
        }
      },
      params);
}

std::vector<EdgeEvent> gen_events(const EventParams& params, std::uint64_t seed) {
  if (params.n < 2) throw std::invalid_argument("event sequence needs n >= 2");
  if (!(params.delete_fraction >= 0.0 && params.delete_fraction < 1.0)) {
    throw std::invalid_argument("delete fraction must lie in [0, 1)");
  }
  const std::size_t block = std::clamp<std::size_t>(params.dense_block, 2, params.n);
  std::mt19937_64 rng(seed);
  std::vector<Edge> present;
  std::unordered_map<std::uint64_t, std::size_t> slot;
  std::vector<EdgeEvent> out;
  out.reserve(params.count);
  const std::size_t max_edges = params.n * (params.n - 1) / 2;
  while (out.size() < params.count) {
    if (!present.empty() && (present.size() == max_edges || unit(rng) < params.delete_fraction)) {
      const std::size_t i = below(rng, present.size());
      const Edge e = present[i];
      slot.erase(edge_key(e.u, e.v));
      present[i] = present.back();
      present.pop_back();
      if (i < present.size()) slot[edge_key(present[i].u, present[i].v)] = i;
      out.push_back({EventKind::kDelete, e.u, e.v});
      continue;
    }
    const std::size_t range = unit(rng) < 0.8 ? block : params.n;
    const auto u = static_cast<Vertex>(below(rng, range));
    const auto v = static_cast<Vertex>(below(rng, range));
    if (u == v || slot.count(edge_key(u, v))) continue;
    slot.emplace(edge_key(u, v), present.size());
    present.push_back({u, v});
    out.push_back({EventKind::kInsert, u, v});
  }
  return out;
}

}  // namespace kcore
