#include "kcore/streaming.hpp"

namespace kcore {

SketchResult run_stream(std::size_t n, std::span<const Edge> edges, const SketchParams& params,
                        UpdatePolicy policy) {
  StreamState state = stream_new(n, params, policy);
  for (const Edge& e : edges) stream_insert(state, e.u, e.v);
  return stream_finalize(state);
}

}  // namespace kcore
