#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "kcore/harness.hpp"
#include "test_util.hpp"

using namespace kcore;

TEST(Percentiles, NearestRankOnTenValues) {
  const std::vector<double> xs{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  EXPECT_EQ(nearest_rank(xs, 50), 5);
  EXPECT_EQ(nearest_rank(xs, 60), 6);
  EXPECT_EQ(nearest_rank(xs, 90), 9);
  EXPECT_EQ(nearest_rank(xs, 100), 10);
  EXPECT_EQ(nearest_rank(xs, 1), 1);
}

TEST(Percentiles, NearestRankRoundsUp) {
  const std::vector<double> xs{10, 20, 30};
  EXPECT_EQ(nearest_rank(xs, 50), 20);  // ceil(1.5) = 2
  EXPECT_EQ(nearest_rank(xs, 34), 20);  // ceil(1.02) = 2
  EXPECT_EQ(nearest_rank(xs, 33), 10);  // ceil(0.99) = 1
  EXPECT_THROW(nearest_rank({}, 50), std::invalid_argument);
  EXPECT_THROW(nearest_rank(xs, 0), std::invalid_argument);
}

TEST(Percentiles, FiltersByMinCore) {
  const CoreLabels exact{1, 5, 10, 20, 4};
  const ApproxLabels approx{100, 6, 5, 20, 0};
  const ErrorReport r = error_percentiles(exact, approx, 5);
  ASSERT_EQ(r.count, 3u);
  // Errors are 0.2, 0.5 and 0; sorted 0, 0.2, 0.5.
  EXPECT_DOUBLE_EQ(*r.median, 0.2);
  EXPECT_DOUBLE_EQ(*r.p60, 0.2);
  EXPECT_DOUBLE_EQ(*r.p70, 0.5);
  EXPECT_DOUBLE_EQ(*r.p90, 0.5);
}

TEST(Percentiles, EmptyWhenNoVertexQualifies) {
  const ErrorReport r = error_percentiles({1, 2}, {1, 2}, 5);
  EXPECT_TRUE(r.empty());
  EXPECT_FALSE(r.median.has_value());
  EXPECT_FALSE(r.p90.has_value());
}

TEST(Percentiles, RejectsMismatchedLengths) {
  EXPECT_THROW(error_percentiles({5, 5}, {5}, 5), std::invalid_argument);
  EXPECT_THROW(error_percentiles({5}, {5}, 0), std::invalid_argument);
}

TEST(Baseline, CliqueGetsFirstThresholdAboveDegree) {
  // K6 has degree 5: survives T=4, removed at T=8.
  const auto r = simple_iterative_baseline(testutil::clique(6));
  for (double x : r.labels) EXPECT_EQ(x, 8.0);
  EXPECT_EQ(r.rounds, 1u);
}

TEST(Baseline, LabelsAreThresholdsAndBracketCoreness) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = testutil::random_graph(80, 0.15, seed);
    const CoreLabels exact = peel_coreness(g);
    const auto r = simple_iterative_baseline(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      // Survivors of threshold T/2 are in the (T/2)-core, and every vertex
      // of the T-core survives threshold T.
      EXPECT_GT(r.labels[v], static_cast<double>(exact[v]));
      EXPECT_LE(r.labels[v], std::max(4.0, 2.0 * exact[v] + 2.0));
    }
  }
}

TEST(Baseline, RejectsBadParameters) {
  const Graph g = testutil::clique(3);
  EXPECT_THROW(simple_iterative_baseline(g, 0.0), std::invalid_argument);
  EXPECT_THROW(simple_iterative_baseline(g, 4.0, 1.0), std::invalid_argument);
}

TEST(Emit, LabelsAreTabSeparated) {
  std::ostringstream out;
  emit_labels(out, ApproxLabels{1.5, 2.0});
  EXPECT_EQ(out.str(), "0\t1.5\n1\t2\n");
  std::ostringstream exact;
  emit_labels(exact, CoreLabels{3, 0});
  EXPECT_EQ(exact.str(), "0\t3\n1\t0\n");
}

TEST(Emit, StatsRoundTripAsJson) {
  SpaceStats stats;
  stats.add_level(10);
  stats.add_level(4);
  RoundTrace trace;
  trace.rounds = 4;
  trace.violations.push_back({1, 2, 99});
  std::ostringstream out;
  emit_stats(out, stats, &trace);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["levels"], 2);
  EXPECT_EQ(j["max_level_edges"], 10);
  EXPECT_EQ(j["sum_level_edges"], 14);
  EXPECT_EQ(j["trace_rounds"], 4);
  EXPECT_EQ(j["trace_budget_violations"], 1);
  EXPECT_EQ(j["trace_violation_round_machine_load"][0][2], 99);
}

TEST(Bench, MeanRowsAndMissingFiles) {
  BenchConfig config;
  config.inputs.push_back({"g", "", testutil::random_graph(300, 0.08, 1)});
  config.inputs.push_back({"missing", "/nonexistent/graph.txt", std::nullopt});
  config.t_values = {2, 3};
  config.m_values = {2.0};
  config.runs = 2;
  const BenchReport report = run_bench(config);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_NE(report.failures[0].find("missing"), std::string::npos);
  ASSERT_EQ(report.rows.size(), 6u);
  const BenchRow* mean = report.mean("g", 3, 2.0);
  ASSERT_NE(mean, nullptr);
  EXPECT_DOUBLE_EQ(*mean->errors.median, (*report.rows[3].errors.median + *report.rows[4].errors.median) / 2);

  std::ostringstream csv;
  emit_report(csv, report);
  std::string header;
  std::getline(std::istringstream(csv.str()) >> std::ws, header);
  EXPECT_EQ(header, "graph,mode,T,M,epsilon,seed,median,p60,p70,p80,p90,max_edges,sum_edges,runtime_ms");
  EXPECT_NE(csv.str().find(",mean,"), std::string::npos);
}

TEST(Bench, ParsesModes) {
  EXPECT_EQ(parse_bench_mode("stream"), BenchMode::kStream);
  EXPECT_THROW(parse_bench_mode("nope"), std::invalid_argument);
}
