#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kcore/generators.hpp"
#include "kcore/streaming.hpp"
#include "stream_fixtures.hpp"
#include "test_util.hpp"

using namespace kcore;
using testutil::multi_level_params;
using testutil::shuffled_edges;

TEST(Stream, EmptyStreamLabelsZero) {
  const StreamState s = stream_new(10, multi_level_params(1));
  EXPECT_EQ(s.retained_edges(), 0u);
  const auto r = stream_finalize(s);
  EXPECT_EQ(r.labels, ApproxLabels(10, 0.0));
  EXPECT_EQ(r.stats.peak_total_edges, 0u);
}

TEST(Stream, RejectsBadInput) {
  EXPECT_THROW(stream_new(1, multi_level_params(1)), std::invalid_argument);
  StreamState s = stream_new(5, multi_level_params(1));
  EXPECT_THROW(stream_insert(s, 2, 2), std::invalid_argument);
  EXPECT_THROW(stream_insert(s, 0, 5), std::invalid_argument);
}

TEST(Stream, SameSeedSameState) {
  const Graph g = testutil::random_graph(150, 0.06, 3);
  const auto a = run_stream(150, g.edges(), multi_level_params(4));
  const auto b = run_stream(150, g.edges(), multi_level_params(4));
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.stats.per_level_edges, b.stats.per_level_edges);
}

TEST(Stream, SingleEdgePromotesNothing) {
  StreamState s = stream_new(50, multi_level_params(2));
  stream_insert(s, 3, 9);
  for (Vertex v = 0; v < 50; ++v) EXPECT_EQ(s.sketch().member_level(v), kNoLevel);
}

TEST(Stream, TriangleWithSingleLevel) {
  SketchParams p;
  p.epsilon = 0.5;
  StreamState s = stream_new(3, p);
  stream_insert(s, 0, 1);
  stream_insert(s, 1, 2);
  stream_insert(s, 2, 0);
  EXPECT_EQ(stream_finalize(s).labels, (ApproxLabels{1.0, 1.0, 1.0}));
}

TEST(Stream, CliqueOrderInsensitive) {
  const Graph k5 = testutil::clique(5);
  SketchParams p = multi_level_params(6, 2);
  const auto reference = run_stream(5, k5.edges(), p).labels;
  for (std::uint64_t order = 0; order < 10; ++order) {
    EXPECT_EQ(run_stream(5, shuffled_edges(k5, order), p).labels, reference);
  }
}

TEST(Stream, DuplicateInsertionIsNoOp) {
  const Graph g = testutil::random_graph(120, 0.08, 5);
  StreamState s = stream_new(120, multi_level_params(7));
  std::vector<Edge> seen;
  std::mt19937_64 rng(1);
  for (const Edge& e : shuffled_edges(g, 2)) {
    stream_insert(s, e.u, e.v);
    seen.push_back(e);
    const Edge again = seen[rng() % seen.size()];
    stream_insert(s, again.v, again.u);
  }
  testutil::expect_matches_batch(s.sketch(), {g.edges().begin(), g.edges().end()}, false);
}

TEST(Stream, EveryPrefixMatchesBatch) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = testutil::random_graph(90, 0.12, 100 + seed);
    StreamState s = stream_new(90, multi_level_params(seed, 2 + seed % 3));
    std::vector<Edge> prefix;
    for (const Edge& e : shuffled_edges(g, seed)) {
      stream_insert(s, e.u, e.v);
      prefix.push_back(e);
      testutil::expect_matches_batch(s.sketch(), prefix, false);
      if (::testing::Test::HasFatalFailure()) return;
    }
  }
}

TEST(Stream, FinalLabelsEqualBatchSketch) {
  const Graph g = gen_synthetic(GnpParams{3000, 0.004}, 8);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    for (double m : {1.2, 2.0}) {
      SketchParams p;
      p.mode = Mode::kPractical;
      p.practical_t = 3;
      p.practical_m = m;
      p.epsilon = 0.6;
      p.seed = seed;
      const auto batch = run_sketch(g, p);
      const auto streamed = run_stream(g.num_vertices(), shuffled_edges(g, seed), p);
      EXPECT_EQ(streamed.labels, batch.labels);
      EXPECT_EQ(streamed.level, batch.level);
    }
  }
}

TEST(Stream, IncrementalMatchesFullRelabel) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gen_synthetic(CliqueChainParams{30, 2, 9}, seed);
    const std::size_t n = g.num_vertices();
    StreamState fast = stream_new(n, multi_level_params(seed, 3, 1.5));
    StreamState slow = stream_new(n, multi_level_params(seed, 3, 1.5), UpdatePolicy::kFullRelabel);
    for (const Edge& e : shuffled_edges(g, seed)) {
      stream_insert(fast, e.u, e.v);
      stream_insert(slow, e.u, e.v);
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(fast.sketch().member_level(v), slow.sketch().member_level(v));
      }
    }
    EXPECT_EQ(stream_finalize(fast).labels, stream_finalize(slow).labels);
  }
}

TEST(Stream, ProtectedUnionOnlyGrows) {
  const Graph g = testutil::random_graph(150, 0.07, 9);
  StreamState s = stream_new(150, multi_level_params(3, 2));
  const std::size_t levels = s.sketch().schedule().levels();
  std::vector<std::uint32_t> before(150, kNoLevel);
  for (const Edge& e : shuffled_edges(g, 4)) {
    stream_insert(s, e.u, e.v);
    for (Vertex v = 0; v < 150; ++v) {
      const std::uint32_t now = s.sketch().member_level(v);
      ASSERT_LE(now, before[v]);
      before[v] = now;
    }
  }
  std::size_t promoted = 0;
  for (Vertex v = 0; v < 150; ++v) promoted += before[v] + 1 < levels;
  EXPECT_GT(promoted, 0u);
}

TEST(Stream, PeakTracksRetainedEdges) {
  const Graph g = testutil::random_graph(200, 0.05, 10);
  StreamState s = stream_new(200, multi_level_params(5));
  std::size_t peak = 0;
  for (const Edge& e : shuffled_edges(g, 5)) {
    stream_insert(s, e.u, e.v);
    std::size_t total = 0;
    for (std::size_t j = 0; j < s.sketch().schedule().levels(); ++j) {
      total += s.sketch().level_graph(j).num_edges();
    }
    EXPECT_EQ(s.retained_edges(), total);
    peak = std::max(peak, total);
  }
  EXPECT_EQ(s.peak_retained_edges(), peak);
  EXPECT_EQ(stream_finalize(s).stats.peak_total_edges, peak);
}
