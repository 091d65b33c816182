#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/sampler.hpp"

namespace kcore {

using ApproxLabels = std::vector<double>;

enum class Mode : std::uint8_t { kTheory, kPractical };

/// Constant family. kBatch: 96/192/384 ln n / eps^2 (p0 additionally / n).
/// kTurnstile: 12/24/48, with recovery capacity 24 ln n / eps^2.
enum class ThresholdProfile : std::uint8_t { kBatch, kTurnstile };

struct SketchParams {
  double epsilon = 0.5;
  Mode mode = Mode::kTheory;
  /// Practical-mode promotion threshold T (upper cutoff is 2T).
  std::uint32_t practical_t = 3;
  /// Practical-mode growth factor M.
  double practical_m = 2.0;
  std::uint64_t seed = 0;
  ThresholdProfile profile = ThresholdProfile::kBatch;
  /// Cap on the number of levels; 0 means run until p reaches 1. The last
  /// level always samples with probability 1.
  std::size_t max_levels = 0;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

struct SketchThresholds {
  double p0 = 1.0;
  double growth = 2.0;
  /// Promotion threshold L (a label l is promoted when l >= lower).
  double lower = 0.0;
  /// Upper cutoff U; labels above it fall back to (1 - eps) U / p_j.
  double upper = 0.0;
  /// Sparse-recovery capacity t used by the turnstile engine.
  std::size_t recovery_capacity = 0;
};

/// Natural logarithm throughout. Throws std::invalid_argument for n < 2.
SketchThresholds derive_thresholds(const SketchParams& params, std::size_t n);

LevelSchedule make_schedule(const SketchThresholds& thresholds, const SketchParams& params);

/// (1 - eps) l / p_j when l <= U, else (1 - eps) U / p_j. Requires l >= L or
/// p_j == 1; throws std::logic_error otherwise.
double assign_label(CoreNumber l, double p_j, double epsilon, const SketchThresholds& thresholds);

struct SpaceStats {
  std::size_t levels = 0;
  std::vector<std::size_t> per_level_edges;
  std::size_t max_level_edges = 0;
  std::size_t sum_level_edges = 0;
  /// Largest total number of retained sampled edges observed at any point
  /// of a stream; equals sum_level_edges for the batch sketch.
  std::size_t peak_total_edges = 0;
  /// Largest number of edges held across all sparse recoveries (turnstile).
  std::size_t sparse_recovery_peak = 0;

  void add_level(std::size_t edges);
};

inline constexpr std::uint32_t kNoLevel = std::numeric_limits<std::uint32_t>::max();

struct SketchResult {
  ApproxLabels labels;
  SpaceStats stats;
  /// Index j of the set the vertex was promoted into.
  std::vector<std::uint32_t> level;
};

/// Batch adaptive sketch. Throws std::invalid_argument for n < 2.
SketchResult run_sketch(const Graph& g, const SketchParams& params);

}  // namespace kcore
