#include <gtest/gtest.h>

#include <cmath>

#include "kcore/generators.hpp"
#include "kcore/peeling.hpp"
#include "kcore/sketch.hpp"
#include "test_util.hpp"

using namespace kcore;

namespace {

SketchParams theory(double eps, std::uint64_t seed = 0) {
  SketchParams p;
  p.epsilon = eps;
  p.seed = seed;
  return p;
}

SketchParams practical(std::uint32_t t, double m, double eps, std::uint64_t seed) {
  SketchParams p;
  p.profile = ThresholdProfile::kTurnstile;
  p.mode = Mode::kPractical;
  p.practical_t = t;
  p.practical_m = m;
  p.epsilon = eps;
  p.seed = seed;
  return p;
}

}  // namespace

TEST(Thresholds, TheoryConstants) {
  const std::size_t n = 1000;
  const double ln_n = std::log(1000.0);
  const auto t = derive_thresholds(theory(0.5), n);
  EXPECT_DOUBLE_EQ(t.p0, 96 * ln_n / (0.25 * n));
  EXPECT_DOUBLE_EQ(t.lower, 192 * ln_n / 0.25);
  EXPECT_DOUBLE_EQ(t.upper, 2 * t.lower);
  EXPECT_EQ(t.growth, 2.0);
}

TEST(Thresholds, PracticalKeepsTheoryP0) {
  SketchParams params = practical(3, 1.5, 0.5, 0);
  params.profile = ThresholdProfile::kBatch;
  const auto t = derive_thresholds(params, 5000);
  EXPECT_DOUBLE_EQ(t.p0, derive_thresholds(theory(0.5), 5000).p0);
  EXPECT_EQ(t.lower, 3.0);
  EXPECT_EQ(t.upper, 6.0);
  EXPECT_EQ(t.growth, 1.5);
  EXPECT_EQ(t.recovery_capacity, 6u);
}

TEST(Thresholds, TurnstileProfile) {
  SketchParams p = theory(0.5);
  p.profile = ThresholdProfile::kTurnstile;
  const double ln_n = std::log(800.0);
  const auto t = derive_thresholds(p, 800);
  EXPECT_DOUBLE_EQ(t.p0, 12 * ln_n / (0.25 * 800));
  EXPECT_DOUBLE_EQ(t.lower, 24 * ln_n / 0.25);
  EXPECT_DOUBLE_EQ(t.upper, 48 * ln_n / 0.25);
  EXPECT_EQ(t.recovery_capacity, static_cast<std::size_t>(std::floor(24 * ln_n / 0.25)));
}

TEST(Thresholds, Validation) {
  EXPECT_THROW(derive_thresholds(theory(0.0), 10), std::invalid_argument);
  EXPECT_THROW(derive_thresholds(theory(1.5), 10), std::invalid_argument);
  EXPECT_THROW(derive_thresholds(theory(0.5), 1), std::invalid_argument);
  EXPECT_THROW(derive_thresholds(practical(0, 2, 0.5, 0), 10), std::invalid_argument);
  EXPECT_THROW(derive_thresholds(practical(2, 1.0, 0.5, 0), 10), std::invalid_argument);
}

TEST(AssignLabel, BranchesAgreeAtUpperCutoff) {
  const auto t = derive_thresholds(practical(4, 2, 0.5, 0), 100);
  EXPECT_DOUBLE_EQ(assign_label(8, 0.25, 0.5, t), 0.5 * 8 / 0.25);
  EXPECT_DOUBLE_EQ(assign_label(9, 0.25, 0.5, t), 0.5 * 8 / 0.25);
  EXPECT_DOUBLE_EQ(assign_label(5, 0.25, 0.5, t), 0.5 * 5 / 0.25);
  EXPECT_THROW(assign_label(3, 0.25, 0.5, t), std::logic_error);
  EXPECT_DOUBLE_EQ(assign_label(0, 1.0, 0.5, t), 0.0);
}

TEST(AssignLabel, FallbackMatchesClosedForm) {
  const std::size_t n = 1u << 16;
  for (double eps : {0.5, 1.0}) {
    const SketchParams params = theory(eps);
    const auto t = derive_thresholds(params, n);
    const LevelSchedule s = make_schedule(t, params);
    for (std::size_t j = 0; j < s.last_level() && j <= 5; ++j) {
      const auto above = static_cast<CoreNumber>(std::ceil(t.upper)) + 1;
      const double closed = 2 * (1 - eps) * n / std::pow(2.0, static_cast<double>(j) - 1);
      EXPECT_NEAR(assign_label(above, s.p(j), eps, t), closed, 1e-9 * n) << j;
    }
  }
}

TEST(RunSketch, TriangleDegeneratesToScaledPeeling) {
  const auto r = run_sketch(testutil::clique(3), theory(0.5));
  EXPECT_EQ(r.labels, (ApproxLabels{1.0, 1.0, 1.0}));
  EXPECT_EQ(r.stats.levels, 1u);
  EXPECT_EQ(r.stats.per_level_edges, (std::vector<std::size_t>{3}));
}

TEST(RunSketch, SingleLevelEqualsScaledCoreness) {
  const Graph g = testutil::random_graph(120, 0.1, 4);
  const auto r = run_sketch(g, theory(0.3));
  const CoreLabels c = peel_coreness(g);
  ASSERT_EQ(r.stats.levels, 1u);
  for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_DOUBLE_EQ(r.labels[v], 0.7 * c[v]);
}

TEST(RunSketch, RejectsTinyGraphs) {
  EXPECT_THROW(run_sketch(Graph::from_edges(1, std::vector<Edge>{}), theory(0.5)),
               std::invalid_argument);
}

TEST(RunSketch, DeterministicPerSeed) {
  const Graph g = gen_synthetic(GnpParams{3000, 0.01}, 6);
  const auto params = practical(3, 2, 0.5, 8);
  const auto a = run_sketch(g, params);
  const auto b = run_sketch(g, params);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.stats.per_level_edges, b.stats.per_level_edges);
  EXPECT_NE(a.stats.per_level_edges, run_sketch(g, practical(3, 2, 0.5, 9)).stats.per_level_edges);
}

TEST(RunSketch, StateInvariants) {
  const Graph g = gen_synthetic(GnpParams{3000, 0.01}, 1);
  const auto params = practical(3, 1.5, 0.5, 2);
  const auto r = run_sketch(g, params);
  const auto thr = derive_thresholds(params, g.num_vertices());
  const LevelSchedule s = make_schedule(thr, params);
  EXPECT_LE(r.stats.levels, s.levels());
  EXPECT_LE(r.stats.max_level_edges, r.stats.sum_level_edges);
  EXPECT_LE(r.stats.sum_level_edges, r.stats.levels * r.stats.max_level_edges);
  std::size_t promoted_early = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ASSERT_NE(r.level[v], kNoLevel);
    promoted_early += r.level[v] + 1 < s.levels();
    EXPECT_GE(r.labels[v], 0.0);
  }
  EXPECT_GT(promoted_early, 0u);
  // Each H_j equals the rank-filtered edges not induced by shallower sets.
  const EdgeHasher h(params.seed);
  for (std::size_t j = 0; j < r.stats.levels; ++j) {
    std::vector<char> mask(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) mask[v] = r.level[v] < j;
    EXPECT_EQ(sample_level(g, h, s, j, mask).num_edges(), r.stats.per_level_edges[j]);
  }
}

// Theory-mode level bounds on a graph large enough for p0 < 1.
TEST(RunSketch, TheoryModeLevelBounds) {
  const std::size_t n = 20000;
  const Graph g = gen_synthetic(GnpParams{n, 0.002}, 3);
  const CoreLabels c = peel_coreness(g);
  const double eps = 0.5;
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    const auto r = run_sketch(g, theory(eps, seed));
    const auto thr = derive_thresholds(theory(eps, seed), n);
    const LevelSchedule s = make_schedule(thr, theory(eps, seed));
    std::size_t in_range = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (r.level[v] < s.last_level()) {
        const double j = r.level[v];
        EXPECT_LT(c[v], 2 * (1 + eps) * n / std::pow(2.0, j - 1));
      }
      in_range += (1 - 2 * eps) * c[v] <= r.labels[v] && r.labels[v] <= c[v];
    }
    EXPECT_GE(in_range, 0.99 * n);
    const double ln_n = std::log(static_cast<double>(n));
    EXPECT_LE(r.stats.sum_level_edges, 384 * (1 + eps) * (1 + eps) / (eps * eps) * n * ln_n * ln_n);
  }
}
