#pragma once

#include <cstddef>
#include <span>

#include "kcore/graph.hpp"
#include "kcore/leveled_sketch.hpp"
#include "kcore/sketch.hpp"

namespace kcore {

/// Insert/delete sketch. Each sampled edge induced by protected vertices is
/// parked in the recoveries S^u_j and S^v_j of both endpoints; when an
/// endpoint is demoted its recovery is emptied back into H_j, in the order
/// the greedy labeling removed the demoted vertices.
class TurnstileState {
 public:
  TurnstileState(std::size_t n, const SketchParams& params,
                 OverflowPolicy overflow = OverflowPolicy::kThrow)
      : sketch_(n, params, {.keep_excluded = true, .overflow = overflow}) {}

  const LeveledSketch& sketch() const noexcept { return sketch_; }
  LeveledSketch& sketch() noexcept { return sketch_; }

 private:
  LeveledSketch sketch_;
};

/// Default parameters for the turnstile engine: the turnstile constant
/// profile on top of `base`.
inline SketchParams turnstile_params(SketchParams base) {
  base.profile = ThresholdProfile::kTurnstile;
  return base;
}

inline TurnstileState ts_new(std::size_t n, const SketchParams& params,
                             OverflowPolicy overflow = OverflowPolicy::kThrow) {
  return TurnstileState(n, params, overflow);
}

/// Throws std::invalid_argument if the edge is already present.
inline void ts_insert(TurnstileState& s, Vertex u, Vertex v) { s.sketch().insert(u, v); }
/// Throws std::invalid_argument if the edge is absent, RecoveryOverflow if a
/// demotion meets a recovery above capacity (under OverflowPolicy::kThrow).
inline void ts_delete(TurnstileState& s, Vertex u, Vertex v) { s.sketch().erase(u, v); }
inline SketchResult ts_finalize(const TurnstileState& s) { return s.sketch().finalize(); }

void ts_apply(TurnstileState& state, std::span<const EdgeEvent> events);

/// Edges surviving an event sequence, in first-insertion order. Throws on
/// the same inconsistencies as the turnstile engine.
std::vector<Edge> surviving_edges(std::span<const EdgeEvent> events);

}  // namespace kcore
