#include "rwl/walk.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace rwl {
namespace {

Graph two_edges() { return parse_graph("4 2\n0 1\n2 3\n"); }

TEST(WalkEnumerator, PathOfTwo) {
  auto all = enumerate_labelings_walk(build_family(FamilySpec::path(2)));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].seq, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(all[1].seq, (std::vector<Vertex>{1, 0}));
}

TEST(WalkEnumerator, SingleVertex) {
  EXPECT_EQ(enumerate_labelings_walk(build_family(FamilySpec::path(1))).size(), 1u);
}

TEST(WalkEnumerator, SevenPathAcceptsAndRejects) {
  Graph p7 = build_family(FamilySpec::path(7));
  std::vector<unsigned> left{7, 6, 5, 3, 2, 1, 4};
  std::vector<unsigned> right{4, 6, 5, 3, 2, 1, 7};
  EXPECT_TRUE(is_walk_obtainable(p7, order_from_labels(left)));
  EXPECT_FALSE(is_walk_obtainable(p7, order_from_labels(right)));
  EXPECT_EQ(order_from_labels(left).seq, (std::vector<Vertex>{5, 4, 3, 6, 2, 1, 0}));
}

TEST(WalkEnumerator, DisconnectedHasNoLabelings) {
  EXPECT_TRUE(enumerate_labelings_walk(two_edges()).empty());
}

TEST(WalkEnumerator, RejectsLargeGraphs) {
  try {
    enumerate_labelings_walk(build_family(FamilySpec::path(11)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::too_large);
  }
}

TEST(WalkEnumerator, MatchesBruteForcePermutations) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected_graph(1 + i % 7, 0.25, rng);
    auto walk = enumerate_labelings_walk(g);
    auto brute = testing::brute_force_connected_orders(g);
    ASSERT_EQ(walk.size(), brute.size()) << render_graph(g);
    for (std::size_t j = 0; j < walk.size(); ++j) {
      EXPECT_EQ(walk[j].seq, brute[j]);
      EXPECT_TRUE(has_connected_prefixes(g, walk[j]));
    }
  }
}

TEST(Labels, RoundTripAndValidation) {
  std::vector<unsigned> labels{3, 1, 2};
  EXPECT_EQ(labels_from_order(order_from_labels(labels)), labels);
  std::vector<unsigned> dup{1, 1, 2};
  std::vector<unsigned> zero{0, 1, 2};
  EXPECT_THROW(order_from_labels(dup), Error);
  EXPECT_THROW(order_from_labels(zero), Error);
}

TEST(ConnectedPrefixes, RejectsMalformedOrders) {
  Graph p3 = build_family(FamilySpec::path(3));
  EXPECT_TRUE(has_connected_prefixes(p3, {{1, 0, 2}}));
  EXPECT_FALSE(has_connected_prefixes(p3, {{0, 2, 1}}));
  EXPECT_FALSE(has_connected_prefixes(p3, {{0, 1}}));
  EXPECT_FALSE(has_connected_prefixes(p3, {{0, 1, 1}}));
}

TEST(SubsetDp, Examples) {
  EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::complete(4))), Natural(24));
  EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::cycle(5))), Natural(40));
  EXPECT_EQ(count_labelings_dp(two_edges()), Natural(0));
  EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::path(1))), Natural(1));
}

TEST(SubsetDp, FamilyClosedFormsUpToTwelve) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::path(n))), pow2(n - 1));
    EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::complete(n))), factorial(n));
    if (n >= 3) {
      EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::cycle(n))), Natural(n) * pow2(n - 2));
    }
  }
}

TEST(SubsetDp, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_connected_graph(1 + i % 8, 0.3, rng);
    EXPECT_EQ(count_labelings_dp(g), Natural(testing::brute_force_connected_orders(g).size()));
  }
}

TEST(SubsetDp, DenseLayeredAndThreadedAgree) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_connected_graph(6 + i % 10, 0.15, rng);
    Natural dense = count_labelings_dp(g, {DpMode::dense, 1});
    EXPECT_EQ(count_labelings_dp(g, {DpMode::layered, 1}), dense);
    EXPECT_EQ(count_labelings_dp(g, {DpMode::dense, 4}), dense);
    EXPECT_EQ(count_labelings_dp(g, {DpMode::layered, 3}), dense);
  }
}

TEST(SubsetDp, LayeredHandlesSparseGraphsBeyondDenseRange) {
  EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::path(64))), pow2(63));
  EXPECT_EQ(count_labelings_dp(build_family(FamilySpec::cycle(40))), Natural(40) * pow2(38));
}

TEST(SubsetDp, SizeLimits) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < 65; ++v) edges.emplace_back(v, v + 1);
  Graph p65(65, edges);
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::invalid_spec;
  };
  EXPECT_EQ(kind([&] { count_labelings_dp(p65); }), ErrorKind::too_large);
  EXPECT_EQ(kind([&] { count_labelings_started_at(p65, 0); }), ErrorKind::too_large);
  Graph p30 = build_family(FamilySpec::path(30));
  EXPECT_EQ(kind([&] { count_labelings_dp(p30, {DpMode::dense, 1}); }), ErrorKind::too_large);
  EXPECT_EQ(kind([&] { count_labelings_started_at(p30, 30); }), ErrorKind::vertex_out_of_range);
}

TEST(StartedAt, PathPositions) {
  Graph p5 = build_family(FamilySpec::path(5));
  EXPECT_EQ(count_labelings_started_at(p5, 2), Natural(6));
  EXPECT_EQ(count_labelings_started_at(p5, 0), Natural(1));
  for (Vertex k = 0; k < 5; ++k) EXPECT_EQ(count_labelings_started_at(p5, k), binomial(4, k));
}

TEST(StartedAt, GridCorner) {
  EXPECT_EQ(count_labelings_started_at(build_family(FamilySpec::grid(2, 3)), 0), Natural(24));
}

TEST(StartedAt, SumsToTotal) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_connected_graph(2 + i % 9, 0.3, rng);
    Natural total(0);
    for (Vertex v = 0; v < g.order(); ++v) total += count_labelings_started_at(g, v);
    EXPECT_EQ(total, count_labelings_dp(g));
  }
}

TEST(SubsetDp, RelabelingInvariance) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_connected_graph(3 + i % 10, 0.2, rng);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(count_labelings_dp(relabel(g, perm)), count_labelings_dp(g));
  }
}

}  // namespace
}  // namespace rwl
