#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

/// Chain of 5-vertex blocks that forces one deletion round per block when
/// probing at threshold 4. Vertex 0 is isolated; the last five vertices form
/// a K5. Requires n % 5 == 0 and n >= 10.
Graph gen_hard_instance(std::size_t n);

/// Erdos-Renyi G(n, p), generated by geometric skipping over the pair
/// sequence (expected O(n + m) time).
struct GnpParams {
  std::size_t n = 0;
  double p = 0.0;
};

/// Configuration model with target degree d; self-loops and parallel edges
/// are dropped, so realized degrees are at most d. Requires n*d even.
struct RegularishParams {
  std::size_t n = 0;
  std::size_t degree = 0;
};

/// `count` cliques with sizes drawn uniformly from [min_size, max_size],
/// consecutive cliques joined by one edge between random members.
struct CliqueChainParams {
  std::size_t count = 0;
  std::size_t min_size = 1;
  std::size_t max_size = 1;
};

using SyntheticParams = std::variant<GnpParams, RegularishParams, CliqueChainParams>;

Graph gen_synthetic(const SyntheticParams& params, std::uint64_t seed);

/// Random valid insert/delete sequence: deletions always target a present
/// edge, insertions an absent one. Most insertions fall inside the first
/// `dense_block` vertices so that the surviving graph has nontrivial cores.
struct EventParams {
  std::size_t n = 0;
  std::size_t count = 0;
  double delete_fraction = 0.3;
  std::size_t dense_block = 0;
};

std::vector<EdgeEvent> gen_events(const EventParams& params, std::uint64_t seed);

}  // namespace kcore
