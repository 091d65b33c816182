#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/sketch.hpp"

namespace kcore {

struct ClusterConfig {
  std::size_t machines = 1;
  /// Per-machine resident-edge limit; loads above it are reported.
  std::optional<std::size_t> budget;
  /// Before sketching, repeatedly delete (in parallel rounds) all vertices
  /// of degree below 1, then 2, then 3. Deleted vertices get their exact
  /// coreness; only the remaining 3-core is sketched.
  bool prune3 = false;
};

struct BudgetViolation {
  std::size_t round = 0;
  std::size_t machine = 0;
  std::size_t load = 0;
};

enum class RoundKind : std::uint8_t { kPrune, kSample, kLabel };

struct RoundTrace {
  /// Sampling plus labeling rounds: two per sketch level.
  std::size_t rounds = 0;
  std::size_t levels = 0;
  std::size_t prune_rounds = 0;
  /// One entry per executed round (prune rounds first).
  std::vector<RoundKind> kinds;
  /// Resident edges per machine, per round.
  std::vector<std::vector<std::size_t>> loads;
  /// Protected vertices broadcast to every machine, per round.
  std::vector<std::size_t> broadcast;
  std::size_t max_load = 0;
  /// Largest single-machine load over labeling rounds.
  std::size_t max_label_load = 0;
  std::vector<BudgetViolation> violations;
  /// gamma with m = n^(1 + gamma); informational.
  double density_exponent = 0.0;
};

struct MrResult {
  SketchResult sketch;
  RoundTrace trace;
};

/// Per level: a sampling round where edges are hash-partitioned over the
/// machines, each machine drops edges induced by the broadcast protected
/// set and keeps those of rank <= p_j; then a labeling round where machine 0
/// receives the sample and runs exclusive labeling and promotion. Without
/// prune3 the labels equal run_sketch with the same parameters.
MrResult run_mr_sketch(const Graph& g, const SketchParams& params, const ClusterConfig& cluster);

}  // namespace kcore
