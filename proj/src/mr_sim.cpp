#include "kcore/mr_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kcore/peeling.hpp"

namespace kcore {

namespace {

class Meter {
 public:
  Meter(std::size_t machines, std::optional<std::size_t> budget, RoundTrace& trace)
      : machines_(machines), budget_(budget), trace_(trace) {}

  void record(RoundKind kind, std::vector<std::size_t> loads, std::size_t broadcast) {
    const std::size_t round = trace_.loads.size();
    for (std::size_t m = 0; m < machines_; ++m) {
      trace_.max_load = std::max(trace_.max_load, loads[m]);
      if (kind == RoundKind::kLabel) trace_.max_label_load = std::max(trace_.max_label_load, loads[m]);
      if (budget_ && loads[m] > *budget_) trace_.violations.push_back({round, m, loads[m]});
    }
    trace_.kinds.push_back(kind);
    trace_.loads.push_back(std::move(loads));
    trace_.broadcast.push_back(broadcast);
  }

 private:
  std::size_t machines_;
  std::optional<std::size_t> budget_;
  RoundTrace& trace_;
};

}  // namespace

MrResult run_mr_sketch(const Graph& g, const SketchParams& params, const ClusterConfig& cluster) {
  if (cluster.machines < 1) throw std::invalid_argument("need at least one machine");
  const std::size_t n = g.num_vertices();
  const SketchThresholds thr = derive_thresholds(params, n);
  const LevelSchedule schedule = make_schedule(thr, params);
  const EdgeHasher hasher(params.seed);
  const EdgeHasher partitioner(params.seed ^ 0xa0761d6478bd642fULL);
  const std::size_t machines = cluster.machines;

  MrResult out;
  RoundTrace& trace = out.trace;
  Meter meter(machines, cluster.budget, trace);
  if (n > 1 && g.num_edges() > 0) {
    trace.density_exponent = std::log(static_cast<double>(g.num_edges())) / std::log(static_cast<double>(n)) - 1.0;
  }

  const auto edges = g.edges();
  std::vector<std::size_t> machine(edges.size());
  std::vector<double> rank(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    machine[i] = partitioner.hash(edges[i].u, edges[i].v) % machines;
    rank[i] = hasher.rank(edges[i].u, edges[i].v);
  }

  SketchResult& res = out.sketch;
  res.labels.assign(n, 0.0);
  res.level.assign(n, kNoLevel);
  std::vector<char> alive_edge(edges.size(), 1);
  std::vector<char> pruned(n, 0);

  if (cluster.prune3) {
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    for (CoreNumber d = 1; d <= 3; ++d) {
      for (;;) {
        std::vector<Vertex> doomed;
        for (Vertex v = 0; v < n; ++v) {
          if (!pruned[v] && degree[v] < d) doomed.push_back(v);
        }
        if (doomed.empty()) break;
        std::vector<std::size_t> loads(machines, 0);
        for (std::size_t i = 0; i < edges.size(); ++i) loads[machine[i]] += alive_edge[i];
        meter.record(RoundKind::kPrune, std::move(loads), 0);
        ++trace.prune_rounds;
        for (Vertex v : doomed) {
          pruned[v] = 1;
          res.labels[v] = d - 1;
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (alive_edge[i] && (pruned[edges[i].u] || pruned[edges[i].v])) {
            alive_edge[i] = 0;
            --degree[edges[i].u];
            --degree[edges[i].v];
          }
        }
      }
    }
  }

  std::vector<char> excluded(n, 0);
  std::size_t excluded_count = 0;
  std::size_t unlabeled = n;
  for (Vertex v = 0; v < n; ++v) {
    if (pruned[v]) {
      excluded[v] = 1;
      --unlabeled;
    }
  }
  // Pruned vertices carry no edges, so marking them excluded changes no
  // sample; it only keeps them out of promotion.
  std::vector<Edge> sampled;
  std::vector<Vertex> promoted;
  for (std::size_t j = 0; j < schedule.levels() && unlabeled > 0; ++j) {
    const double p = schedule.p(j);
    std::vector<std::size_t> loads(machines, 0);
    sampled.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive_edge[i]) continue;
      const Edge& e = edges[i];
      if (excluded[e.u] && excluded[e.v]) {
        alive_edge[i] = 0;
        continue;
      }
      ++loads[machine[i]];
      if (rank[i] <= p) sampled.push_back(e);
    }
    meter.record(RoundKind::kSample, std::move(loads), excluded_count);

    std::vector<std::size_t> label_loads(machines, 0);
    label_loads[0] = sampled.size();
    meter.record(RoundKind::kLabel, std::move(label_loads), 0);
    trace.rounds += 2;
    ++trace.levels;

    const Graph h = Graph::from_edges(n, sampled);
    res.stats.add_level(h.num_edges());
    const auto peel = exclusive_peel(h, [&](Vertex v) { return excluded[v] != 0; });
    const bool last = j == schedule.last_level();
    promoted.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (excluded[v]) continue;
      const CoreNumber l = peel.label[v];
      if (static_cast<double>(l) >= thr.lower || last) {
        res.labels[v] = assign_label(l, p, params.epsilon, thr);
        res.level[v] = static_cast<std::uint32_t>(j);
        promoted.push_back(v);
      }
    }
    for (Vertex v : promoted) excluded[v] = 1;
    excluded_count += promoted.size();
    unlabeled -= promoted.size();
  }
  res.stats.peak_total_edges = res.stats.sum_level_edges;
  return out;
}

}  // namespace kcore
