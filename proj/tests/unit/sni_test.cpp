#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "corpus.hpp"
#include "dan/error.hpp"
#include "dan/evaluator.hpp"
#include "dan/huffman.hpp"
#include "dan/sni.hpp"
#include "oracles.hpp"

namespace dan {
namespace {

TEST(Sni, SingleEdge) {
  const SniResult r = steiner_node_insertion(testing::single_edge(), 3);
  EXPECT_EQ(r.host.node_count(), 2u);
  EXPECT_EQ(r.steiner_count, 0u);
  EXPECT_TRUE(r.host.has_edge(0, 1));
  EXPECT_EQ(expected_path_length(testing::single_edge(), r.host), Epl::finite(1.0));
}

TEST(Sni, UniformTriangle) {
  const DemandGraph g = testing::uniform_triangle();
  const SniResult r = steiner_node_insertion(g, 3);
  EXPECT_EQ(r.steiner_count, 0u);
  EXPECT_EQ(r.host.edge_count(), 3u);
  EXPECT_NEAR(expected_path_length(g, r.host).value(), 1.0, 1e-12);
}

TEST(Sni, StarFour) {
  const DemandGraph g = testing::star(4);
  const SniResult r = steiner_node_insertion(g, 3);
  EXPECT_EQ(r.steiner_count, 2u);
  EXPECT_EQ(r.host.node_count(), 7u);
  EXPECT_EQ(r.host.max_degree(), 3u);
  EXPECT_NEAR(expected_path_length(g, r.host).value(), 2.0, 1e-12);
  EXPECT_EQ(sni_node_bound(g, 3), 13u);
}

TEST(Sni, Errors) {
  EXPECT_THROW(steiner_node_insertion(testing::star(4), 2), Error);
  const std::vector<DemandEdge> raw{{0, 1, 1.0}};
  EXPECT_THROW(steiner_node_insertion(normalize(3, raw), 3), Error);
}

TEST(SniNodeBound, Examples) {
  EXPECT_EQ(sni_node_bound(testing::single_edge(), 4), 2u);
  // Cycle on 6 nodes: every degree is 2, d = 4: ((d-3)n + 2m)/(d-1) = 18/3.
  std::vector<DemandEdge> raw;
  for (NodeId v = 0; v < 6; ++v) raw.push_back({v, (v + 1) % 6, 1.0});
  EXPECT_EQ(sni_node_bound(normalize(6, raw), 5), 6u);
  // Star S4, delta = 5: ((d-2)n + 2m)/(d-1) = (10 + 8)/3.
  EXPECT_EQ(sni_node_bound(testing::star(4), 5), 6u);
}

double entropy_cost(const DemandGraph& g, int d) {
  double c = 1.0;
  for (NodeId v = 0; v < g.node_count(); ++v) c += g.marginal(v) * entropy_base_d(conditional(g, v), d);
  return c;
}

class SniProperties : public ::testing::TestWithParam<int> {};

TEST_P(SniProperties, DegreeCostNodeCount) {
  const int delta = GetParam();
  for (const DemandGraph& g : testing::random_corpus(500, 41)) {
    const SniResult r = steiner_node_insertion(g, delta);
    EXPECT_LE(r.host.max_degree(), static_cast<std::size_t>(delta));
    EXPECT_EQ(r.host.original_count(), g.node_count());
    EXPECT_EQ(r.host.steiner_count(), r.steiner_count);
    const Epl epl = expected_path_length(g, r.host);
    ASSERT_TRUE(epl.is_finite());
    EXPECT_NEAR(r.entropy_cost_bound, entropy_cost(g, delta - 1), 1e-9);
    EXPECT_LE(epl.value(), r.entropy_cost_bound + 1e-6);
    EXPECT_LE(r.host.node_count(), sni_node_bound(g, delta));
    EXPECT_GE(epl.value(), epl_lower_bound(g, delta) - 1e-9);
  }
}

TEST_P(SniProperties, RouteLengthsMatchTreeDepths) {
  const int delta = GetParam();
  for (const DemandGraph& g : testing::random_corpus(100, 42)) {
    const SniResult r = steiner_node_insertion(g, delta);
    std::vector<HuffmanTree> trees;
    for (NodeId v = 0; v < g.node_count(); ++v) trees.push_back(build_huffman(conditional(g, v), delta - 1));
    const auto edges = g.edges();
    ASSERT_EQ(r.route_lengths.size(), edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      const std::uint32_t route = trees[e.u].depth_of(e.v) + trees[e.v].depth_of(e.u) - 1;
      EXPECT_EQ(r.route_lengths[i], route);
      const auto d = bfs_distances(r.host, e.u);
      ASSERT_TRUE(d[e.v].has_value());
      EXPECT_LE(*d[e.v], route);
    }
  }
}

TEST_P(SniProperties, Deterministic) {
  const int delta = GetParam();
  for (const DemandGraph& g : testing::random_corpus(30, 43)) {
    EXPECT_EQ(steiner_node_insertion(g, delta).host, steiner_node_insertion(g, delta).host);
  }
}

INSTANTIATE_TEST_SUITE_P(Deltas, SniProperties, ::testing::Values(3, 4, 8, 16));

TEST(SniApproximation, FactorAtMostFour) {
  for (int delta = 3; delta <= 64; ++delta) {
    const double f = 2.0 * std::log2(delta + 1.0) / std::log2(delta - 1.0);
    EXPECT_LE(f, 4.0 + 1e-12);
  }
}

TEST(SniWideRoot, StaysWithinDelta) {
  for (const DemandGraph& g : testing::random_corpus(100, 44)) {
    for (int delta : {3, 5}) {
      const SniResult r = steiner_node_insertion(g, delta, SniOptions{true});
      EXPECT_LE(r.host.max_degree(), static_cast<std::size_t>(delta));
      EXPECT_TRUE(expected_path_length(g, r.host).is_finite());
    }
  }
}

}  // namespace
}  // namespace dan
