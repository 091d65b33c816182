#include "kcore/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "kcore/streaming.hpp"

namespace kcore {

double nearest_rank(const std::vector<double>& sorted, unsigned q) {
  if (sorted.empty()) throw std::invalid_argument("percentile of an empty sample");
  if (q == 0 || q > 100) throw std::invalid_argument("percentile must lie in (0, 100]");
  const std::size_t k = std::max<std::size_t>(1, (q * sorted.size() + 99) / 100);
  return sorted[k - 1];
}

ErrorReport error_percentiles(const CoreLabels& exact, const ApproxLabels& approx,
                              CoreNumber min_core) {
  if (exact.size() != approx.size()) throw std::invalid_argument("label vectors differ in length");
  if (min_core < 1) throw std::invalid_argument("min_core must be at least 1");
  std::vector<double> errors;
  for (std::size_t v = 0; v < exact.size(); ++v) {
    if (exact[v] < min_core) continue;
    const double c = exact[v];
    errors.push_back(std::abs(approx[v] - c) / c);
  }
  ErrorReport r;
  r.count = errors.size();
  if (errors.empty()) return r;
  std::sort(errors.begin(), errors.end());
  r.median = nearest_rank(errors, 50);
  r.p60 = nearest_rank(errors, 60);
  r.p70 = nearest_rank(errors, 70);
  r.p80 = nearest_rank(errors, 80);
  r.p90 = nearest_rank(errors, 90);
  return r;
}

BaselineResult simple_iterative_baseline(const Graph& g, double initial_threshold, double growth) {
  if (!(initial_threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  if (!(growth > 1.0)) throw std::invalid_argument("growth must exceed 1");
  const std::size_t n = g.num_vertices();
  BaselineResult r;
  r.labels.assign(n, 0.0);
  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t remaining = n;
  double threshold = initial_threshold;
  std::vector<Vertex> doomed;
  while (remaining > 0) {
    doomed.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && static_cast<double>(degree[v]) < threshold) doomed.push_back(v);
    }
    if (doomed.empty()) {
      threshold *= growth;
      continue;
    }
    ++r.rounds;
    for (Vertex v : doomed) {
      alive[v] = 0;
      r.labels[v] = threshold;
    }
    for (Vertex v : doomed) {
      for (Vertex w : g.neighbors(v)) {
        if (alive[w]) --degree[w];
      }
    }
    remaining -= doomed.size();
  }
  return r;
}

const char* to_string(BenchMode mode) {
  switch (mode) {
    case BenchMode::kSketch: return "sketch";
    case BenchMode::kStream: return "stream";
    case BenchMode::kMrSim: return "mrsim";
    case BenchMode::kBaseline: return "baseline";
  }
  return "?";
}

BenchMode parse_bench_mode(const std::string& name) {
  for (BenchMode m : {BenchMode::kSketch, BenchMode::kStream, BenchMode::kMrSim, BenchMode::kBaseline}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown bench mode '" + name + "'");
}

const BenchRow* BenchReport::mean(const std::string& graph, std::uint32_t t, double m) const {
  for (const BenchRow& row : rows) {
    if (!row.seed && row.graph == graph && row.t == t && row.m == m) return &row;
  }
  return nullptr;
}

namespace {

std::optional<double> mean_of(const std::vector<BenchRow>& runs, std::optional<double> ErrorReport::*field) {
  double total = 0.0;
  std::size_t count = 0;
  for (const BenchRow& r : runs) {
    if (const auto& x = r.errors.*field) {
      total += *x;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return total / static_cast<double>(count);
}

BenchRow mean_row(const std::vector<BenchRow>& runs) {
  BenchRow mean = runs.front();
  mean.seed.reset();
  mean.errors.median = mean_of(runs, &ErrorReport::median);
  mean.errors.p60 = mean_of(runs, &ErrorReport::p60);
  mean.errors.p70 = mean_of(runs, &ErrorReport::p70);
  mean.errors.p80 = mean_of(runs, &ErrorReport::p80);
  mean.errors.p90 = mean_of(runs, &ErrorReport::p90);
  mean.max_edges = mean.sum_edges = mean.runtime_ms = 0.0;
  for (const BenchRow& r : runs) {
    mean.max_edges += r.max_edges;
    mean.sum_edges += r.sum_edges;
    mean.runtime_ms += r.runtime_ms;
  }
  const auto k = static_cast<double>(runs.size());
  mean.max_edges /= k;
  mean.sum_edges /= k;
  mean.runtime_ms /= k;
  return mean;
}

}  // namespace

BenchReport run_bench(BenchConfig config) {
  if (config.runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (config.min_core < 1) throw std::invalid_argument("min_core must be at least 1");
  BenchReport report;
  for (BenchInput& input : config.inputs) {
    if (!input.graph) {
      try {
        LoadOptions options;
        options.honor_header = true;
        input.graph = load_edge_list_file(input.path, options).graph;
      } catch (const std::exception& e) {
        report.failures.push_back(input.name + ": " + e.what());
        continue;
      }
    }
    const Graph& g = *input.graph;
    const CoreLabels exact = peel_coreness(g);
    for (std::uint32_t t : config.t_values) {
      for (double m : config.m_values) {
        std::vector<BenchRow> runs;
        for (std::size_t r = 0; r < config.runs; ++r) {
          SketchParams params;
          params.epsilon = config.epsilon;
          params.mode = Mode::kPractical;
          params.practical_t = t;
          params.practical_m = m;
          params.seed = config.base_seed + r;

          BenchRow row;
          row.graph = input.name;
          row.mode = to_string(config.mode);
          row.t = t;
          row.m = m;
          row.epsilon = config.epsilon;
          row.seed = params.seed;
          const auto start = std::chrono::steady_clock::now();
          ApproxLabels labels;
          SpaceStats stats;
          switch (config.mode) {
            case BenchMode::kSketch: {
              auto res = run_sketch(g, params);
              labels = std::move(res.labels);
              stats = std::move(res.stats);
              break;
            }
            case BenchMode::kStream: {
              auto res = run_stream(g.num_vertices(), g.edges(), params);
              labels = std::move(res.labels);
              stats = std::move(res.stats);
              break;
            }
            case BenchMode::kMrSim: {
              ClusterConfig cluster;
              cluster.machines = config.machines;
              cluster.prune3 = config.prune3;
              auto res = run_mr_sketch(g, params, cluster);
              labels = std::move(res.sketch.labels);
              stats = std::move(res.sketch.stats);
              break;
            }
            case BenchMode::kBaseline:
              labels = simple_iterative_baseline(g, t, m).labels;
              break;
          }
          row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          row.errors = error_percentiles(exact, labels, config.min_core);
          row.max_edges = static_cast<double>(stats.max_level_edges);
          row.sum_edges = static_cast<double>(stats.sum_level_edges);
          runs.push_back(std::move(row));
        }
        BenchRow mean = mean_row(runs);
        for (BenchRow& row : runs) report.rows.push_back(std::move(row));
        report.rows.push_back(std::move(mean));
      }
    }
  }
  return report;
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void emit_labels(std::ostream& out, const ApproxLabels& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << v << '\t' << format_number(labels[v]) << '\n';
}

void emit_labels(std::ostream& out, const CoreLabels& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << v << '\t' << labels[v] << '\n';
}

void emit_stats(std::ostream& out, const SpaceStats& stats, const RoundTrace* trace) {
  nlohmann::ordered_json j;
  j["levels"] = stats.levels;
  j["per_level_edges"] = stats.per_level_edges;
  j["max_level_edges"] = stats.max_level_edges;
  j["sum_level_edges"] = stats.sum_level_edges;
  j["peak_total_edges"] = stats.peak_total_edges;
  j["sparse_recovery_peak"] = stats.sparse_recovery_peak;
  if (trace) {
    j["trace_rounds"] = trace->rounds;
    j["trace_levels"] = trace->levels;
    j["trace_prune_rounds"] = trace->prune_rounds;
    j["trace_max_load"] = trace->max_load;
    j["trace_max_label_load"] = trace->max_label_load;
    j["trace_loads"] = trace->loads;
    j["trace_broadcast"] = trace->broadcast;
    j["trace_density_exponent"] = trace->density_exponent;
    j["trace_budget_violations"] = trace->violations.size();
    auto violations = nlohmann::ordered_json::array();
    for (const auto& v : trace->violations) violations.push_back({v.round, v.machine, v.load});
    j["trace_violation_round_machine_load"] = std::move(violations);
  }
  out << j.dump(2) << '\n';
}

void emit_report(std::ostream& out, const BenchReport& report) {
  out << "graph,mode,T,M,epsilon,seed,median,p60,p70,p80,p90,max_edges,sum_edges,runtime_ms\n";
  const auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string(); };
  for (const BenchRow& r : report.rows) {
    out << r.graph << ',' << r.mode << ',' << r.t << ',' << format_number(r.m) << ','
        << format_number(r.epsilon) << ',' << (r.seed ? std::to_string(*r.seed) : "mean") << ','
        << opt(r.errors.median) << ',' << opt(r.errors.p60) << ',' << opt(r.errors.p70) << ','
        << opt(r.errors.p80) << ',' << opt(r.errors.p90) << ',' << format_number(r.max_edges) << ','
        << format_number(r.sum_edges) << ',' << format_number(r.runtime_ms) << '\n';
  }
}

}  // namespace kcore
