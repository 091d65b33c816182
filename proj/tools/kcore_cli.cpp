#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kcore/generators.hpp"
#include "kcore/harness.hpp"
#include "kcore/mr_sim.hpp"
#include "kcore/peeling.hpp"
#include "kcore/sketch.hpp"
#include "kcore/streaming.hpp"
#include "kcore/turnstile.hpp"

using namespace kcore;

namespace {

struct Common {
  std::string input;
  std::string output;
  std::string stats;
  std::uint64_t seed = 1;
  double epsilon = 0.5;
  std::string mode = "practical";
  std::uint32_t t = 3;
  double m = 2.0;
};

void add_common(CLI::App* cmd, Common& c, bool with_sketch) {
  cmd->add_option("--input", c.input, "Edge list (u v per line, '#' comments)")->required();
  cmd->add_option("--output", c.output, "Labels TSV (default: stdout)");
  if (!with_sketch) return;
  cmd->add_option("--stats", c.stats, "Stats JSON path");
  cmd->add_option("--seed", c.seed, "Hash seed (64-bit unsigned)");
  cmd->add_option("--epsilon", c.epsilon, "Approximation parameter in (0, 1)")
      ->check(CLI::Range(0.0, 1.0).description("epsilon must lie in (0, 1)"));
  cmd->add_option("--mode", c.mode, "theory | practical")->check(CLI::IsMember({"theory", "practical"}));
  cmd->add_option("--t", c.t, "Practical lower threshold T (>= 1)")
      ->check(CLI::PositiveNumber.description("T must be a positive integer"));
  cmd->add_option("--m", c.m, "Practical per-level growth M (> 1)");
}

SketchParams params_of(const Common& c, ThresholdProfile profile) {
  SketchParams p;
  p.epsilon = c.epsilon;
  p.mode = c.mode == "theory" ? Mode::kTheory : Mode::kPractical;
  p.practical_t = c.t;
  p.practical_m = c.m;
  p.seed = c.seed;
  p.profile = profile;
  p.validate();
  return p;
}

Graph load_graph(const std::string& path) {
  LoadOptions options;
  options.honor_header = true;
  return load_edge_list_file(path, options).graph;
}

template <class Labels>
void write_labels(const std::string& path, const Labels& labels) {
  if (path.empty()) {
    emit_labels(std::cout, labels);
  } else {
    write_file(path, [&](std::ostream& out) { emit_labels(out, labels); });
  }
}

void write_stats(const std::string& path, const SpaceStats& stats, const RoundTrace* trace = nullptr) {
  if (path.empty()) return;
  write_file(path, [&](std::ostream& out) { emit_stats(out, stats, trace); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate k-core decomposition via adaptive edge sampling"};
  app.require_subcommand(1);

  Common exact_opts;
  auto* exact = app.add_subcommand("exact", "Exact coreness by peeling");
  add_common(exact, exact_opts, false);

  Common sketch_opts;
  auto* sketch = app.add_subcommand("sketch", "Batch multi-level sketch");
  add_common(sketch, sketch_opts, true);

  Common stream_opts;
  auto* stream = app.add_subcommand("stream", "Insertion-only streaming sketch over the edge list order");
  add_common(stream, stream_opts, true);

  Common ts_opts;
  std::string events_path;
  std::size_t ts_n = 0;
  auto* turnstile = app.add_subcommand("turnstile", "Insert/delete streaming sketch");
  turnstile->add_option("--events", events_path, "Event file ('+ u v' / '- u v')")->required();
  turnstile->add_option("--n", ts_n, "Vertex count (default: max id + 1)");
  turnstile->add_option("--output", ts_opts.output, "Labels TSV (default: stdout)");
  turnstile->add_option("--stats", ts_opts.stats, "Stats JSON path");
  turnstile->add_option("--seed", ts_opts.seed, "Hash seed (64-bit unsigned)");
  turnstile->add_option("--epsilon", ts_opts.epsilon, "Approximation parameter in (0, 1)")
      ->check(CLI::Range(0.0, 1.0));
  turnstile->add_option("--mode", ts_opts.mode, "theory | practical")
      ->check(CLI::IsMember({"theory", "practical"}));
  turnstile->add_option("--t", ts_opts.t, "Practical lower threshold T (>= 1)")->check(CLI::PositiveNumber);
  turnstile->add_option("--m", ts_opts.m, "Practical per-level growth M (> 1)");

  Common mr_opts;
  std::size_t machines = 4;
  std::optional<std::size_t> budget;
  bool prune3 = false;
  auto* mrsim = app.add_subcommand("mrsim", "Simulated MapReduce execution with round trace");
  add_common(mrsim, mr_opts, true);
  mrsim->add_option("--machines", machines, "Machine count P (>= 1)")->check(CLI::PositiveNumber);
  mrsim->add_option("--budget", budget, "Per-machine edge budget");
  mrsim->add_flag("--prune3", prune3, "Resolve coreness <= 2 exactly before sketching");

  std::vector<std::string> bench_inputs;
  std::string bench_output;
  std::string bench_mode = "sketch";
  std::vector<std::uint32_t> bench_t{2, 3};
  std::vector<double> bench_m{2.0};
  double bench_epsilon = 0.5;
  std::size_t runs = 3;
  std::uint64_t bench_seed = 1;
  CoreNumber min_core = 5;
  std::size_t bench_machines = 4;
  bool bench_prune3 = false;
  auto* bench = app.add_subcommand("bench", "Error/space report over graphs, T and M values and seeds");
  bench->add_option("--input", bench_inputs, "Edge list paths")->required();
  bench->add_option("--output", bench_output, "CSV path (default: stdout)");
  bench->add_option("--mode", bench_mode, "sketch | stream | mrsim | baseline")
      ->check(CLI::IsMember({"sketch", "stream", "mrsim", "baseline"}));
  bench->add_option("--t", bench_t, "T values")->check(CLI::PositiveNumber);
  bench->add_option("--m", bench_m, "M values");
  bench->add_option("--epsilon", bench_epsilon, "Approximation parameter in (0, 1)")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--runs", runs, "Seeds per configuration (>= 1)")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "First seed");
  bench->add_option("--min-core", min_core, "Only vertices with coreness >= this are scored")
      ->check(CLI::PositiveNumber);
  bench->add_option("--machines", bench_machines, "Machines for mrsim mode")->check(CLI::PositiveNumber);
  bench->add_flag("--prune3", bench_prune3, "Prune low coreness in mrsim mode");

  std::string gen_kind = "gnp";
  std::size_t gen_n = 1000;
  double gen_p = 0.01;
  std::size_t gen_degree = 10;
  std::size_t gen_count = 1000;
  std::size_t gen_min = 3;
  std::size_t gen_max = 10;
  std::size_t gen_block = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Synthetic graphs and event streams");
  gen->add_option("--kind", gen_kind, "hard | gnp | regular | cliques | events")
      ->check(CLI::IsMember({"hard", "gnp", "regular", "cliques", "events"}));
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--p", gen_p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--degree", gen_degree, "Target degree (regular)");
  gen->add_option("--count", gen_count, "Clique count (cliques) or event count (events)");
  gen->add_option("--min-size", gen_min, "Minimum clique size")->check(CLI::PositiveNumber);
  gen->add_option("--max-size", gen_max, "Maximum clique size")->check(CLI::PositiveNumber);
  gen->add_option("--dense-block", gen_block, "Dense vertex block for events");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--output", gen_output, "Output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*exact) {
      write_labels(exact_opts.output, peel_coreness(load_graph(exact_opts.input)));
    } else if (*sketch) {
      const auto r = run_sketch(load_graph(sketch_opts.input), params_of(sketch_opts, ThresholdProfile::kBatch));
      write_labels(sketch_opts.output, r.labels);
      write_stats(sketch_opts.stats, r.stats);
    } else if (*stream) {
      std::ifstream in(stream_opts.input);
      if (!in) throw std::runtime_error("cannot open edge list: " + stream_opts.input);
      // Stream order is file order, so edges are read without canonical sorting.
      std::vector<Edge> edges;
      std::size_t n = 0;
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::uint64_t u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra) || u >= UINT32_MAX || v >= UINT32_MAX) {
          throw ParseError(line_no, "expected exactly two vertex ids");
        }
        n = std::max<std::size_t>(n, std::max(u, v) + 1);
        if (u != v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
      const auto r = run_stream(n, edges, params_of(stream_opts, ThresholdProfile::kBatch));
      write_labels(stream_opts.output, r.labels);
      write_stats(stream_opts.stats, r.stats);
    } else if (*turnstile) {
      const auto events = load_events_file(events_path);
      std::size_t n = ts_n;
      for (const EdgeEvent& e : events) n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
      TurnstileState state(n, params_of(ts_opts, ThresholdProfile::kTurnstile));
      ts_apply(state, events);
      const auto r = ts_finalize(state);
      write_labels(ts_opts.output, r.labels);
      write_stats(ts_opts.stats, r.stats);
    } else if (*mrsim) {
      ClusterConfig cluster;
      cluster.machines = machines;
      cluster.budget = budget;
      cluster.prune3 = prune3;
      const auto r = run_mr_sketch(load_graph(mr_opts.input), params_of(mr_opts, ThresholdProfile::kBatch), cluster);
      write_labels(mr_opts.output, r.sketch.labels);
      write_stats(mr_opts.stats, r.sketch.stats, &r.trace);
    } else if (*bench) {
      for (double m : bench_m) {
        if (!(m > 1.0)) throw std::invalid_argument("--m values must exceed 1");
      }
      BenchConfig config;
      for (const auto& path : bench_inputs) config.inputs.push_back({path, path, std::nullopt});
      config.mode = parse_bench_mode(bench_mode);
      config.epsilon = bench_epsilon;
      config.t_values = bench_t;
      config.m_values = bench_m;
      config.runs = runs;
      config.base_seed = bench_seed;
      config.min_core = min_core;
      config.machines = bench_machines;
      config.prune3 = bench_prune3;
      const BenchReport report = run_bench(config);
      for (const auto& failure : report.failures) std::cerr << "error: " << failure << '\n';
      if (bench_output.empty()) {
        emit_report(std::cout, report);
      } else {
        write_file(bench_output, [&](std::ostream& out) { emit_report(out, report); });
      }
      if (!report.failures.empty()) return 1;
    } else if (*gen) {
      const auto write = [&](auto&& body) {
        if (gen_output.empty()) {
          body(std::cout);
        } else {
          write_file(gen_output, body);
        }
      };
      if (gen_kind == "events") {
        if (gen_block > gen_n) throw std::invalid_argument("--dense-block exceeds --n");
        const auto events = gen_events({.n = gen_n, .count = gen_count, .delete_fraction = 0.3, .dense_block = gen_block}, gen_seed);
        write([&](std::ostream& out) {
          for (const EdgeEvent& e : events) {
            out << (e.kind == EventKind::kInsert ? '+' : '-') << ' ' << e.u << ' ' << e.v << '\n';
          }
        });
      } else {
        Graph g;
        if (gen_kind == "hard") {
          g = gen_hard_instance(gen_n);
        } else if (gen_kind == "gnp") {
          g = gen_synthetic(GnpParams{gen_n, gen_p}, gen_seed);
        } else if (gen_kind == "regular") {
          g = gen_synthetic(RegularishParams{gen_n, gen_degree}, gen_seed);
        } else {
          if (gen_min > gen_max) throw std::invalid_argument("--min-size exceeds --max-size");
          g = gen_synthetic(CliqueChainParams{gen_count, gen_min, gen_max}, gen_seed);
        }
        write([&](std::ostream& out) {
          out << "# Nodes: " << g.num_vertices() << " Edges: " << g.num_edges() << '\n';
          for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
        });
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
