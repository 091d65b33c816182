#include <gtest/gtest.h>

#include <numeric>

#include "kcore/generators.hpp"
#include "kcore/mr_sim.hpp"
#include "kcore/peeling.hpp"
#include "stream_fixtures.hpp"
#include "test_util.hpp"

using namespace kcore;

namespace {

SketchParams params_for(std::uint64_t seed) {
  SketchParams p;
  p.mode = Mode::kPractical;
  p.practical_t = 3;
  p.practical_m = 2.0;
  p.epsilon = 0.5;
  p.profile = ThresholdProfile::kTurnstile;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(MrSim, LabelsEqualBatchSketch) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_synthetic(GnpParams{1500 + 100 * seed, 0.006}, seed);
    const auto batch = run_sketch(g, params_for(seed));
    const auto mr = run_mr_sketch(g, params_for(seed), {.machines = 1 + seed % 7});
    EXPECT_EQ(mr.sketch.labels, batch.labels);
    EXPECT_EQ(mr.sketch.stats.per_level_edges, batch.stats.per_level_edges);
    EXPECT_EQ(mr.trace.rounds, 2 * mr.trace.levels);
    EXPECT_EQ(mr.trace.levels, batch.stats.levels);
  }
}

TEST(MrSim, PartitioningConservesLoad) {
  const Graph g = gen_synthetic(GnpParams{2000, 0.005}, 3);
  const auto one = run_mr_sketch(g, params_for(3), {.machines = 1});
  const auto eight = run_mr_sketch(g, params_for(3), {.machines = 8});
  ASSERT_EQ(one.trace.loads.size(), eight.trace.loads.size());
  for (std::size_t r = 0; r < one.trace.loads.size(); ++r) {
    const auto& split = eight.trace.loads[r];
    EXPECT_EQ(one.trace.loads[r][0], std::accumulate(split.begin(), split.end(), std::size_t{0}));
    EXPECT_EQ(one.trace.broadcast[r], eight.trace.broadcast[r]);
  }
  EXPECT_EQ(one.trace.max_label_load, eight.trace.max_label_load);
  EXPECT_LT(eight.trace.loads[0][0], one.trace.loads[0][0]);
}

TEST(MrSim, SampleRoundHoldsEligibleEdges) {
  const Graph g = gen_synthetic(GnpParams{2000, 0.005}, 4);
  const auto mr = run_mr_sketch(g, params_for(4), {.machines = 5});
  const auto& level = mr.sketch.level;
  for (std::size_t j = 0; j < mr.trace.levels; ++j) {
    const auto& loads = mr.trace.loads[2 * j];
    ASSERT_EQ(mr.trace.kinds[2 * j], RoundKind::kSample);
    std::size_t eligible = 0;
    std::size_t protected_count = 0;
    for (const Edge& e : g.edges()) eligible += !(level[e.u] < j && level[e.v] < j);
    for (Vertex v = 0; v < g.num_vertices(); ++v) protected_count += level[v] < j;
    EXPECT_EQ(std::accumulate(loads.begin(), loads.end(), std::size_t{0}), eligible);
    EXPECT_EQ(mr.trace.broadcast[2 * j], protected_count);
    EXPECT_EQ(mr.trace.loads[2 * j + 1][0], mr.sketch.stats.per_level_edges[j]);
  }
}

TEST(MrSim, BudgetViolationsAreReported) {
  const Graph g = gen_synthetic(GnpParams{1000, 0.01}, 5);
  const auto loose = run_mr_sketch(g, params_for(5), {.machines = 4, .budget = g.num_edges()});
  EXPECT_TRUE(loose.trace.violations.empty());
  const auto tight = run_mr_sketch(g, params_for(5), {.machines = 4, .budget = 10});
  ASSERT_FALSE(tight.trace.violations.empty());
  for (const auto& v : tight.trace.violations) EXPECT_GT(v.load, 10u);
  EXPECT_EQ(tight.sketch.labels, loose.sketch.labels);
}

TEST(MrSim, Prune3GivesExactLowCoreness) {
  const Graph g = gen_synthetic(CliqueChainParams{40, 1, 8}, 6);
  const CoreLabels c = peel_coreness(g);
  const auto mr = run_mr_sketch(g, params_for(6), {.machines = 3, .prune3 = true});
  EXPECT_GT(mr.trace.prune_rounds, 0u);
  EXPECT_EQ(mr.trace.rounds, 2 * mr.trace.levels);
  EXPECT_EQ(mr.trace.kinds.size(), mr.trace.prune_rounds + mr.trace.rounds);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c[v] < 3) EXPECT_EQ(mr.sketch.labels[v], c[v]);
  }
  const auto plain = run_mr_sketch(g, params_for(6), {.machines = 3});
  EXPECT_LE(mr.trace.max_label_load, plain.trace.max_label_load);
}

TEST(MrSim, RejectsZeroMachines) {
  EXPECT_THROW(run_mr_sketch(testutil::clique(4), params_for(0), {.machines = 0}),
               std::invalid_argument);
}
