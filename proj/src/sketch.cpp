#include "kcore/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kcore/peeling.hpp"

namespace kcore {

void SketchParams::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1], got " + std::to_string(epsilon));
  }
  if (mode == Mode::kPractical) {
    if (practical_t < 1) throw std::invalid_argument("T must be a positive integer");
    if (!(practical_m > 1.0)) throw std::invalid_argument("M must exceed 1");
  }
}

SketchThresholds derive_thresholds(const SketchParams& params, std::size_t n) {
  params.validate();
  if (n < 2) throw std::invalid_argument("sketch needs n >= 2");
  const double ln_n = std::log(static_cast<double>(n));
  const double eps2 = params.epsilon * params.epsilon;
  const bool turnstile = params.profile == ThresholdProfile::kTurnstile;
  const double base = turnstile ? 12.0 : 96.0;

  SketchThresholds t;
  t.p0 = base * ln_n / (eps2 * static_cast<double>(n));
  if (params.mode == Mode::kTheory) {
    t.growth = 2.0;
    t.lower = 2.0 * base * ln_n / eps2;
    t.upper = 4.0 * base * ln_n / eps2;
    t.recovery_capacity = static_cast<std::size_t>(std::floor(24.0 * ln_n / eps2));
  } else {
    t.growth = params.practical_m;
    t.lower = params.practical_t;
    t.upper = 2.0 * params.practical_t;
    t.recovery_capacity = 2 * static_cast<std::size_t>(params.practical_t);
  }
  return t;
}

LevelSchedule make_schedule(const SketchThresholds& thresholds, const SketchParams& params) {
  return LevelSchedule(thresholds.p0, thresholds.growth, params.max_levels);
}

double assign_label(CoreNumber l, double p_j, double epsilon, const SketchThresholds& thresholds) {
  const double level = static_cast<double>(l);
  if (!(level >= thresholds.lower || p_j == 1.0)) {
    throw std::logic_error("label assigned below the promotion threshold");
  }
  return (1.0 - epsilon) * std::min(level, thresholds.upper) / p_j;
}

void SpaceStats::add_level(std::size_t edges) {
  ++levels;
  per_level_edges.push_back(edges);
  max_level_edges = std::max(max_level_edges, edges);
  sum_level_edges += edges;
}

SketchResult run_sketch(const Graph& g, const SketchParams& params) {
  const std::size_t n = g.num_vertices();
  const SketchThresholds thr = derive_thresholds(params, n);
  const LevelSchedule schedule = make_schedule(thr, params);
  const EdgeHasher hasher(params.seed);

  std::vector<double> rank(g.num_edges());
  for (std::size_t i = 0; i < rank.size(); ++i) {
    rank[i] = hasher.rank(g.edges()[i].u, g.edges()[i].v);
  }

  SketchResult out;
  out.labels.assign(n, 0.0);
  out.level.assign(n, kNoLevel);
  std::vector<char> excluded(n, 0);
  std::size_t unlabeled = n;
  std::vector<Edge> sampled;
  std::vector<Vertex> promoted;
  for (std::size_t j = 0; j < schedule.levels() && unlabeled > 0; ++j) {
    const double p = schedule.p(j);
    sampled.clear();
    for (std::size_t i = 0; i < rank.size(); ++i) {
      const Edge& e = g.edges()[i];
      if (rank[i] <= p && !(excluded[e.u] && excluded[e.v])) sampled.push_back(e);
    }
    const Graph h = Graph::from_edges(n, sampled);
    out.stats.add_level(h.num_edges());

    const auto peel = exclusive_peel(h, [&](Vertex v) { return excluded[v] != 0; });
    const bool last = j == schedule.last_level();
    promoted.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (excluded[v]) continue;
      const CoreNumber l = peel.label[v];
      if (static_cast<double>(l) >= thr.lower || last) {
        out.labels[v] = assign_label(l, p, params.epsilon, thr);
        out.level[v] = static_cast<std::uint32_t>(j);
        promoted.push_back(v);
      }
    }
    for (Vertex v : promoted) excluded[v] = 1;
    unlabeled -= promoted.size();
  }
  out.stats.peak_total_edges = out.stats.sum_level_edges;
  return out;
}

}  // namespace kcore
