#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/mr_sim.hpp"
#include "kcore/peeling.hpp"
#include "kcore/sketch.hpp"

namespace kcore {

/// Relative errors |label - C(v)| / C(v) over vertices with C(v) >= min_core,
/// summarized by nearest-rank percentiles (the ceil(q N / 100)-th smallest).
struct ErrorReport {
  std::size_t count = 0;
  std::optional<double> median;
  std::optional<double> p60;
  std::optional<double> p70;
  std::optional<double> p80;
  std::optional<double> p90;

  bool empty() const noexcept { return count == 0; }
};

/// Throws std::invalid_argument on length mismatch or min_core < 1.
ErrorReport error_percentiles(const CoreLabels& exact, const ApproxLabels& approx,
                              CoreNumber min_core = 5);

/// Nearest-rank percentile of an ascending sample; q in (0, 100].
double nearest_rank(const std::vector<double>& sorted, unsigned q);

/// Threshold-raising heuristic: delete every vertex of degree below T in
/// parallel rounds, labeling it T, until none is left below T; then
/// multiply T by `growth` and continue on what remains.
struct BaselineResult {
  ApproxLabels labels;
  std::size_t rounds = 0;
};

BaselineResult simple_iterative_baseline(const Graph& g, double initial_threshold = 4.0,
                                         double growth = 2.0);

enum class BenchMode : std::uint8_t { kSketch, kStream, kMrSim, kBaseline };

const char* to_string(BenchMode mode);
BenchMode parse_bench_mode(const std::string& name);

struct BenchInput {
  std::string name;
  /// Loaded lazily from `path` when `graph` is empty.
  std::string path;
  std::optional<Graph> graph;
};

struct BenchConfig {
  std::vector<BenchInput> inputs;
  BenchMode mode = BenchMode::kSketch;
  double epsilon = 0.5;
  std::vector<std::uint32_t> t_values{3};
  std::vector<double> m_values{2.0};
  std::size_t runs = 3;
  std::uint64_t base_seed = 1;
  CoreNumber min_core = 5;
  std::size_t machines = 4;
  bool prune3 = false;
};

struct BenchRow {
  std::string graph;
  std::string mode;
  std::uint32_t t = 0;
  double m = 0.0;
  double epsilon = 0.0;
  /// Seed of the run, or nullopt on the per-configuration mean row.
  std::optional<std::uint64_t> seed;
  ErrorReport errors;
  double max_edges = 0.0;
  double sum_edges = 0.0;
  double runtime_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// One message per input that could not be loaded.
  std::vector<std::string> failures;

  /// Mean row for a configuration, if present.
  const BenchRow* mean(const std::string& graph, std::uint32_t t, double m) const;
};

/// Runs every (graph, T, M, seed) job; seeds are base_seed .. base_seed +
/// runs - 1. Unreadable inputs are recorded in `failures` and skipped.
BenchReport run_bench(BenchConfig config);

/// Shortest decimal that round-trips.
std::string format_number(double x);

/// "vertex<TAB>label" lines, ascending vertex id.
void emit_labels(std::ostream& out, const ApproxLabels& labels);
void emit_labels(std::ostream& out, const CoreLabels& labels);
/// Flat JSON object with the space record and, when given, the round trace
/// under trace_* keys.
void emit_stats(std::ostream& out, const SpaceStats& stats, const RoundTrace* trace = nullptr);
/// CSV with header graph,mode,T,M,epsilon,seed,median,p60,p70,p80,p90,
/// max_edges,sum_edges,runtime_ms. Absent percentiles are empty fields.
void emit_report(std::ostream& out, const BenchReport& report);

/// Opens `path` for writing and calls `write`; failures name the path.
template <class Writer>
void write_file(const std::string& path, Writer&& write);

}  // namespace kcore

#include <fstream>
#include <stdexcept>

namespace kcore {

template <class Writer>
void write_file(const std::string& path, Writer&& write) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace kcore
