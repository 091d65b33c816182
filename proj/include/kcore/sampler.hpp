#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "kcore/graph.hpp"

namespace kcore {

/// Seeded edge-to-rank map. Ranks are SipHash-2-4 of the canonical edge key,
/// keyed by the seed, truncated to 53 bits and scaled into [0, 1).
class EdgeHasher {
 public:
  explicit EdgeHasher(std::uint64_t seed = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  /// Raw 64-bit keyed hash of the canonical pair. Throws on u == v.
  std::uint64_t hash(Vertex u, Vertex v) const;
  /// Throws std::invalid_argument on u == v.
  double rank(Vertex u, Vertex v) const;

 private:
  std::uint64_t seed_;
  std::array<unsigned char, 16> key_{};
};

inline double edge_rank(const EdgeHasher& hasher, Vertex u, Vertex v) { return hasher.rank(u, v); }

/// p_j = min(1, p0 * growth^j); the last level always has probability 1.
class LevelSchedule {
 public:
  /// Throws unless p0 > 0 and growth > 1. If max_levels is non-zero, the
  /// schedule is cut after that many levels, with the last forced to 1.
  LevelSchedule(double p0, double growth, std::size_t max_levels = 0);

  double p0() const noexcept { return p0_; }
  double growth() const noexcept { return growth_; }
  std::size_t levels() const noexcept { return levels_; }
  std::size_t last_level() const noexcept { return levels_ - 1; }
  double p(std::size_t j) const noexcept;

 private:
  double p0_;
  double growth_;
  std::size_t levels_;
};

/// Smallest j with r <= p_j.
std::size_t level_of(double r, const LevelSchedule& schedule);

/// Edges of g with rank <= p_j that are not induced by `excluded`
/// (a per-vertex mask, nonzero = excluded; empty span = nothing excluded).
Graph sample_level(const Graph& g, const EdgeHasher& hasher, const LevelSchedule& schedule,
                   std::size_t j, std::span<const char> excluded);

}  // namespace kcore
