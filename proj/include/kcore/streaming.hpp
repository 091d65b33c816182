#pragma once

#include <cstddef>
#include <span>

#include "kcore/graph.hpp"
#include "kcore/leveled_sketch.hpp"
#include "kcore/sketch.hpp"

namespace kcore {

/// Insertion-only one-pass sketch. Sampled edges induced by already
/// protected vertices are discarded for good.
class StreamState {
 public:
  StreamState(std::size_t n, const SketchParams& params,
              UpdatePolicy policy = UpdatePolicy::kIncremental)
      : sketch_(n, params, {.keep_excluded = false, .policy = policy}) {}

  const LeveledSketch& sketch() const noexcept { return sketch_; }
  std::size_t retained_edges() const noexcept { return sketch_.retained_edges(); }
  std::size_t peak_retained_edges() const noexcept { return sketch_.peak_retained_edges(); }

 private:
  friend void stream_insert(StreamState&, Vertex, Vertex);
  LeveledSketch sketch_;
};

/// Throws std::invalid_argument for n < 2.
inline StreamState stream_new(std::size_t n, const SketchParams& params,
                              UpdatePolicy policy = UpdatePolicy::kIncremental) {
  return StreamState(n, params, policy);
}

/// Out-of-range endpoints and self-loops throw std::invalid_argument;
/// repeated edges are no-ops.
inline void stream_insert(StreamState& state, Vertex u, Vertex v) { state.sketch_.insert(u, v); }

/// Labels every vertex; the deepest level plays the p = 1 role for
/// vertices never promoted during the pass.
inline SketchResult stream_finalize(const StreamState& state) { return state.sketch().finalize(); }

/// Streams `edges` in order into a fresh state and finalizes.
SketchResult run_stream(std::size_t n, std::span<const Edge> edges, const SketchParams& params,
                        UpdatePolicy policy = UpdatePolicy::kIncremental);

}  // namespace kcore
