#include "kcore/turnstile.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace kcore {

void ts_apply(TurnstileState& state, std::span<const EdgeEvent> events) {
  for (const EdgeEvent& e : events) {
    if (e.kind == EventKind::kInsert) {
      ts_insert(state, e.u, e.v);
    } else {
      ts_delete(state, e.u, e.v);
    }
  }
}

std::vector<Edge> surviving_edges(std::span<const EdgeEvent> events) {
  std::unordered_map<std::uint64_t, std::size_t> position;
  std::vector<Edge> order;
  std::vector<char> alive;
  for (const EdgeEvent& e : events) {
    if (e.u == e.v) throw std::invalid_argument("self-loop event");
    const std::uint64_t key = edge_key(e.u, e.v);
    auto it = position.find(key);
    if (e.kind == EventKind::kInsert) {
      if (it != position.end() && alive[it->second]) throw std::invalid_argument("edge already present");
      if (it == position.end()) {
        position.emplace(key, order.size());
        order.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
        alive.push_back(1);
      } else {
        alive[it->second] = 1;
      }
    } else {
      if (it == position.end() || !alive[it->second]) throw std::invalid_argument("edge not present");
      alive[it->second] = 0;
    }
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (alive[i]) out.push_back(order[i]);
  }
  return out;
}

}  // namespace kcore
