#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kcore/dynamic_graph.hpp"
#include "kcore/sampler.hpp"
#include "kcore/sketch.hpp"
#include "kcore/sparse_recovery.hpp"

namespace kcore {

/// How a level's promoted set is refreshed after an insertion.
enum class UpdatePolicy : std::uint8_t {
  /// Grow the set locally around the vertices whose support increased.
  kIncremental,
  /// Rerun exclusive labeling on the whole level.
  kFullRelabel,
};

/// What happens when a sparse recovery holds more than t edges at the
/// moment it must be recovered.
enum class OverflowPolicy : std::uint8_t { kThrow, kCount };

class RecoveryOverflow : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dynamic multi-level sketch shared by the streaming and turnstile engines.
///
/// After every update the state is exactly what the batch sketch would build
/// from the current edge set with the same seed: with P_j the union of the
/// promoted sets of levels below j, level j holds the current edges of rank
/// <= p_j not induced by P_j, and its promoted set is every vertex outside
/// P_j whose exclusive label reaches L. A vertex can therefore move to a
/// shallower level when edges arrive, and (with deletions) drop out again.
///
/// With `keep_excluded` set, sampled edges induced by P_j are parked in
/// per-(level, vertex) sparse recoveries instead of being discarded, so they
/// can be restored when an endpoint loses its protection.
class LeveledSketch {
 public:
  struct Options {
    bool keep_excluded = false;
    UpdatePolicy policy = UpdatePolicy::kIncremental;
    OverflowPolicy overflow = OverflowPolicy::kThrow;
  };

  /// Throws std::invalid_argument for n < 2 or invalid params.
  LeveledSketch(std::size_t n, const SketchParams& params, Options options);

  /// Streaming: repeated insertions are no-ops. With keep_excluded: inserting
  /// a present edge throws std::invalid_argument.
  void insert(Vertex u, Vertex v);
  /// Requires keep_excluded. Throws std::invalid_argument for absent edges.
  void erase(Vertex u, Vertex v);
  /// Exact membership; requires keep_excluded.
  bool contains(Vertex u, Vertex v) const;

  SketchResult finalize() const;

  std::size_t num_vertices() const noexcept { return n_; }
  const SketchParams& params() const noexcept { return params_; }
  const SketchThresholds& thresholds() const noexcept { return thresholds_; }
  const LevelSchedule& schedule() const noexcept { return schedule_; }
  const EdgeHasher& hasher() const noexcept { return hasher_; }

  /// Level of the promoted set holding v, or kNoLevel.
  std::uint32_t member_level(Vertex v) const { return member_[v]; }
  const DynamicGraph& level_graph(std::size_t j) const { return levels_[j]; }
  /// Recovery S^v_j, or nullptr when it holds nothing.
  const SparseRecovery* recovery(std::size_t j, Vertex v) const;

  std::size_t retained_edges() const noexcept { return retained_; }
  std::size_t peak_retained_edges() const noexcept { return peak_retained_; }
  std::size_t recovery_edges() const noexcept { return recovery_edges_; }
  std::size_t peak_recovery_edges() const noexcept { return peak_recovery_edges_; }
  std::size_t overflow_count() const noexcept { return overflows_; }
  /// Largest occupancy seen by any recovery at the moment it was recovered.
  std::size_t max_recovered() const noexcept { return max_recovered_; }

  /// (level, vertex) pairs demoted by the most recent update, in the order
  /// the greedy labeling removed them.
  const std::vector<std::pair<std::uint32_t, Vertex>>& last_demotions() const noexcept {
    return last_demotions_;
  }

 private:
  enum class Kind { kInsert, kErase };

  void check_edge(Vertex u, Vertex v) const;
  void apply(Vertex u, Vertex v, Kind kind);
  bool protected_at(Vertex v, std::size_t j) const { return member_[v] < j; }
  bool was_protected_at(Vertex v, std::size_t j) const { return original_[v] < j; }
  void touch(Vertex v);
  void set_member(Vertex v, std::uint32_t level);
  void park(std::size_t j, Vertex a, Vertex b);
  void unpark(std::size_t j, Vertex a, Vertex b);
  void restore(std::size_t j, Vertex x);
  void purge(std::size_t j, Vertex x);
  void grow(std::size_t j);
  void recompute(std::size_t j);

  std::size_t n_;
  SketchParams params_;
  SketchThresholds thresholds_;
  LevelSchedule schedule_;
  EdgeHasher hasher_;
  Options options_;
  CoreNumber promote_at_;

  std::vector<DynamicGraph> levels_;
  std::vector<std::uint32_t> member_;
  std::vector<std::unordered_map<Vertex, SparseRecovery>> parked_;

  // Per-update scratch.
  std::vector<std::uint32_t> original_;
  std::vector<char> touched_flag_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> seeds_;
  std::vector<char> region_mark_;
  std::vector<std::size_t> support_;
  std::vector<std::pair<std::uint32_t, Vertex>> last_demotions_;

  std::size_t retained_ = 0;
  std::size_t peak_retained_ = 0;
  std::size_t recovery_edges_ = 0;
  std::size_t peak_recovery_edges_ = 0;
  std::size_t overflows_ = 0;
  std::size_t max_recovered_ = 0;
};

}  // namespace kcore
