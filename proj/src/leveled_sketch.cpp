#include "kcore/leveled_sketch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kcore/peeling.hpp"

namespace kcore {

LeveledSketch::LeveledSketch(std::size_t n, const SketchParams& params, Options options)
    : n_(n),
      params_(params),
      thresholds_(derive_thresholds(params, n)),
      schedule_(make_schedule(thresholds_, params)),
      hasher_(params.seed),
      options_(options),
      promote_at_(static_cast<CoreNumber>(std::max(1.0, std::ceil(thresholds_.lower)))),
      levels_(schedule_.levels(), DynamicGraph(n)),
      member_(n, kNoLevel),
      parked_(options.keep_excluded ? schedule_.levels() : 0),
      original_(n, kNoLevel),
      touched_flag_(n, 0),
      region_mark_(n, 0),
      support_(n, 0) {}

void LeveledSketch::check_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n_));
  }
  if (u == v) throw std::invalid_argument("self-loop update");
}

bool LeveledSketch::contains(Vertex u, Vertex v) const {
  if (!options_.keep_excluded) throw std::logic_error("membership needs parked edges");
  check_edge(u, v);
  const std::size_t last = schedule_.last_level();
  if (levels_[last].has_edge(u, v)) return true;
  const auto* s = recovery(last, u);
  return s != nullptr && s->contains(edge_key(u, v));
}

const SparseRecovery* LeveledSketch::recovery(std::size_t j, Vertex v) const {
  if (!options_.keep_excluded) return nullptr;
  const auto it = parked_[j].find(v);
  return it == parked_[j].end() ? nullptr : &it->second;
}

void LeveledSketch::insert(Vertex u, Vertex v) {
  check_edge(u, v);
  if (options_.keep_excluded) {
    if (contains(u, v)) throw std::invalid_argument("edge already present");
  } else {
    // Present edges sit in H at their first level; otherwise they were
    // dropped for being induced by protected vertices, which never reverts.
    const std::size_t first = level_of(hasher_.rank(u, v), schedule_);
    if (protected_at(u, first) && protected_at(v, first)) return;
    if (levels_[first].has_edge(u, v)) return;
  }
  apply(u, v, Kind::kInsert);
}

void LeveledSketch::erase(Vertex u, Vertex v) {
  if (!options_.keep_excluded) throw std::logic_error("deletions need parked edges");
  check_edge(u, v);
  if (!contains(u, v)) throw std::invalid_argument("edge not present");
  apply(u, v, Kind::kErase);
}

void LeveledSketch::touch(Vertex v) {
  if (touched_flag_[v]) return;
  touched_flag_[v] = 1;
  touched_.push_back(v);
}

void LeveledSketch::set_member(Vertex v, std::uint32_t level) {
  touch(v);
  member_[v] = level;
}

void LeveledSketch::park(std::size_t j, Vertex a, Vertex b) {
  if (!options_.keep_excluded) return;
  const std::uint64_t key = edge_key(a, b);
  for (Vertex x : {a, b}) {
    auto it = parked_[j].try_emplace(x, thresholds_.recovery_capacity).first;
    it->second.insert(key);
  }
  ++recovery_edges_;
}

void LeveledSketch::unpark(std::size_t j, Vertex a, Vertex b) {
  const std::uint64_t key = edge_key(a, b);
  for (Vertex x : {a, b}) {
    auto it = parked_[j].find(x);
    if (it == parked_[j].end()) throw std::logic_error("parked edge missing");
    it->second.erase(key);
    if (it->second.size() == 0) parked_[j].erase(it);
  }
  --recovery_edges_;
}

void LeveledSketch::restore(std::size_t j, Vertex x) {
  if (!options_.keep_excluded) throw std::logic_error("protection lost in insertion-only sketch");
  const auto it = parked_[j].find(x);
  if (it == parked_[j].end()) return;
  max_recovered_ = std::max(max_recovered_, it->second.size());
  auto recovered = it->second.recover();
  if (recovered.overflow) {
    ++overflows_;
    if (options_.overflow == OverflowPolicy::kThrow) {
      throw RecoveryOverflow("sparse recovery of vertex " + std::to_string(x) + " at level " +
                             std::to_string(j) + " holds " + std::to_string(it->second.size()) +
                             " edges, capacity " + std::to_string(it->second.capacity()));
    }
    recovered.elements = it->second.elements();
  }
  for (std::uint64_t key : recovered.elements) {
    const auto [a, b] = edge_from_key(key);
    unpark(j, a, b);
    levels_[j].add_edge(a, b);
    seeds_.push_back(a == x ? b : a);
  }
}

void LeveledSketch::purge(std::size_t j, Vertex x) {
  auto& h = levels_[j];
  std::vector<Vertex> induced;
  for (Vertex w : h.neighbors(x)) {
    if (protected_at(w, j)) {
      induced.push_back(w);
    } else {
      seeds_.push_back(w);
    }
  }
  for (Vertex w : induced) {
    h.remove_edge(x, w);
    park(j, x, w);
  }
}

// Extends the promoted set of level j to the largest set in which every
// member keeps at least `promote_at_` neighbors among members and protected
// vertices. Only vertices reachable from a seed through eligible vertices
// can join, since any other candidate group was already admissible before.
void LeveledSketch::grow(std::size_t j) {
  const auto& h = levels_[j];
  const auto eligible = [&](Vertex v) {
    return member_[v] > j && region_mark_[v] == 0 && h.degree(v) >= promote_at_;
  };
  std::vector<Vertex> region;
  for (Vertex s : seeds_) {
    if (!eligible(s)) continue;
    region_mark_[s] = 1;
    region.push_back(s);
    for (std::size_t head = region.size() - 1; head < region.size(); ++head) {
      for (Vertex w : h.neighbors(region[head])) {
        if (eligible(w)) {
          region_mark_[w] = 1;
          region.push_back(w);
        }
      }
    }
  }
  if (region.empty()) return;

  std::vector<Vertex> doomed;
  for (Vertex v : region) {
    std::size_t support = 0;
    for (Vertex w : h.neighbors(v)) support += (region_mark_[w] == 1 || member_[w] <= j) ? 1 : 0;
    support_[v] = support;
  }
  for (Vertex v : region) {
    if (support_[v] < promote_at_) {
      region_mark_[v] = 2;
      doomed.push_back(v);
    }
  }
  while (!doomed.empty()) {
    const Vertex v = doomed.back();
    doomed.pop_back();
    for (Vertex w : h.neighbors(v)) {
      if (region_mark_[w] == 1 && --support_[w] < promote_at_) {
        region_mark_[w] = 2;
        doomed.push_back(w);
      }
    }
  }
  for (Vertex v : region) {
    if (region_mark_[v] == 1) set_member(v, static_cast<std::uint32_t>(j));
    region_mark_[v] = 0;
  }
}

void LeveledSketch::recompute(std::size_t j) {
  const auto peel = exclusive_peel(levels_[j], [&](Vertex v) { return protected_at(v, j); });
  const auto level = static_cast<std::uint32_t>(j);
  for (Vertex v : peel.removal_order) {
    const bool promoted = static_cast<double>(peel.label[v]) >= thresholds_.lower;
    if (promoted && member_[v] != level) {
      set_member(v, level);
    } else if (!promoted && member_[v] == level) {
      if (!options_.keep_excluded) throw std::logic_error("demotion in insertion-only sketch");
      set_member(v, kNoLevel);
      last_demotions_.emplace_back(level, v);
    }
  }
}

void LeveledSketch::apply(Vertex u, Vertex v, Kind kind) {
  const std::size_t first = level_of(hasher_.rank(u, v), schedule_);
  const std::size_t last = schedule_.last_level();
  last_demotions_.clear();

  for (std::size_t j = 0; j <= last; ++j) {
    seeds_.clear();
    bool changed = false;
    // Touched vertices are kept in the order their membership changed, so
    // losses are recovered in demotion order.
    for (std::size_t i = 0; i < touched_.size(); ++i) {
      const Vertex x = touched_[i];
      if (was_protected_at(x, j) && !protected_at(x, j)) {
        restore(j, x);
        seeds_.push_back(x);
        changed = true;
      }
    }
    for (std::size_t i = 0; i < touched_.size(); ++i) {
      const Vertex x = touched_[i];
      if (!was_protected_at(x, j) && protected_at(x, j)) {
        purge(j, x);
        changed = true;
      }
    }
    if (j >= first) {
      if (kind == Kind::kInsert) {
        if (protected_at(u, j) && protected_at(v, j)) {
          park(j, u, v);
        } else {
          if (!levels_[j].add_edge(u, v)) throw std::logic_error("sampled edge already present");
          seeds_.push_back(u);
          seeds_.push_back(v);
          changed = true;
        }
      } else if (levels_[j].remove_edge(u, v)) {
        changed = true;
      } else {
        unpark(j, u, v);
      }
    }
    if (changed && j < last) {
      if (kind == Kind::kInsert && options_.policy == UpdatePolicy::kIncremental) {
        grow(j);
      } else {
        recompute(j);
      }
    }
  }

  for (Vertex x : touched_) {
    original_[x] = member_[x];
    touched_flag_[x] = 0;
  }
  touched_.clear();
  retained_ = 0;
  for (const auto& h : levels_) retained_ += h.num_edges();
  peak_retained_ = std::max(peak_retained_, retained_);
  peak_recovery_edges_ = std::max(peak_recovery_edges_, recovery_edges_);
}

SketchResult LeveledSketch::finalize() const {
  SketchResult out;
  out.labels.assign(n_, 0.0);
  out.level.assign(n_, kNoLevel);
  const std::size_t last = schedule_.last_level();
  for (std::size_t j = 0; j <= last; ++j) {
    const auto& h = levels_[j];
    out.stats.add_level(h.num_edges());
    const auto peel = exclusive_peel(h, [&](Vertex v) { return protected_at(v, j); });
    const double p = schedule_.p(j);
    for (Vertex v = 0; v < n_; ++v) {
      if (protected_at(v, j)) continue;
      if (j < last && member_[v] != j) continue;
      out.labels[v] = assign_label(peel.label[v], p, params_.epsilon, thresholds_);
      out.level[v] = static_cast<std::uint32_t>(j);
    }
  }
  out.stats.peak_total_edges = peak_retained_;
  out.stats.sparse_recovery_peak = peak_recovery_edges_;
  return out;
}

}  // namespace kcore
