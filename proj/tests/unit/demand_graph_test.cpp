#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "corpus.hpp"
#include "dan/demand_graph.hpp"
#include "dan/error.hpp"

namespace dan {
namespace {

using testing::single_edge;
using testing::star;
using testing::uniform_triangle;

TEST(Normalize, ScalesWeights) {
  const std::vector<DemandEdge> raw{{0, 1, 2.0}, {1, 2, 1.0}};
  const DemandGraph g = normalize(3, raw);
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(g.weight(2, 1), 1.0 / 3.0);
}

TEST(Normalize, SingleEdgeIsIdentity) { EXPECT_DOUBLE_EQ(single_edge().weight(0, 1), 1.0); }

TEST(Normalize, Errors) {
  const std::vector<DemandEdge> none;
  EXPECT_THROW(
      {
        try {
          normalize(3, none);
        } catch (const Error& e) {
          EXPECT_STREQ(e.what(), "empty demand");
          throw;
        }
      },
      Error);
  const std::vector<DemandEdge> zeros{{0, 1, 0.0}};
  EXPECT_THROW(normalize(2, zeros), Error);
  const std::vector<DemandEdge> loop{{1, 1, 1.0}};
  EXPECT_THROW(normalize(2, loop), Error);
  const std::vector<DemandEdge> dup{{0, 1, 1.0}, {1, 0, 2.0}};
  EXPECT_THROW(normalize(2, dup), Error);
  const std::vector<DemandEdge> negative{{0, 1, -1.0}};
  EXPECT_THROW(normalize(2, negative), Error);
  const std::vector<DemandEdge> range{{0, 5, 1.0}};
  EXPECT_THROW(normalize(3, range), Error);
}

TEST(Normalize, DropsZeroWeightPairs) {
  const std::vector<DemandEdge> raw{{0, 1, 1.0}, {1, 2, 0.0}};
  const DemandGraph g = normalize(3, raw);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(2), 0u);
}

TEST(Marginal, Examples) {
  EXPECT_DOUBLE_EQ(marginal(uniform_triangle(), 0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(marginal(star(4), 0), 1.0);
  EXPECT_DOUBLE_EQ(marginal(star(4), 1), 0.25);
  EXPECT_THROW(marginal(star(4), 5), Error);
}

TEST(Conditional, Examples) {
  const Distribution center = conditional(star(4), 0);
  ASSERT_EQ(center.size(), 4u);
  for (const auto& e : center.entries()) EXPECT_DOUBLE_EQ(e.probability, 0.25);

  const Distribution one = conditional(single_edge(), 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.entries()[0].symbol, 1u);
  EXPECT_DOUBLE_EQ(one.entries()[0].probability, 1.0);

  const std::vector<DemandEdge> raw{{0, 1, 0.3}, {0, 2, 0.1}, {1, 2, 0.6}};
  const Distribution p0 = conditional(normalize(3, raw), 0);
  ASSERT_EQ(p0.size(), 2u);
  EXPECT_NEAR(p0.entries()[0].probability, 0.75, 1e-12);
  EXPECT_NEAR(p0.entries()[1].probability, 0.25, 1e-12);
}

TEST(Conditional, IsolatedNodeThrows) {
  const std::vector<DemandEdge> raw{{0, 1, 1.0}};
  try {
    conditional(normalize(3, raw), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no demand at node"), std::string::npos);
  }
}

TEST(Entropy, Examples) {
  const Distribution uniform4({{0, 0.25}, {1, 0.25}, {2, 0.25}, {3, 0.25}});
  EXPECT_NEAR(entropy_base_d(uniform4, 2), 2.0, 1e-12);
  EXPECT_NEAR(entropy_base_d(uniform4, 4), 1.0, 1e-12);
  const Distribution dyadic({{0, 0.5}, {1, 0.25}, {2, 0.25}});
  EXPECT_NEAR(entropy_base_d(dyadic, 2), 1.5, 1e-12);
  EXPECT_THROW(entropy_base_d(dyadic, 1), Error);
}

TEST(Entropy, ConditionalExamples) {
  EXPECT_NEAR(conditional_entropy(uniform_triangle(), 2), 1.0, 1e-12);
  EXPECT_NEAR(conditional_entropy(single_edge(), 3), 0.0, 1e-12);
  EXPECT_NEAR(conditional_entropy(star(4), 2), 1.0, 1e-12);
  EXPECT_THROW(conditional_entropy(star(4), 1), Error);
}

TEST(LowerBound, Examples) {
  EXPECT_DOUBLE_EQ(epl_lower_bound(single_edge(), 3), 1.0);
  EXPECT_NEAR(epl_lower_bound(star(256), 2), 0.5 * std::log(256.0) / std::log(3.0) - 1.0, 1e-9);
  EXPECT_NEAR(epl_lower_bound(star(256), 2), 1.5237, 1e-4);
  EXPECT_DOUBLE_EQ(epl_lower_bound(star(4), 3), 1.0);
}

TEST(DegreeStats, Examples) {
  const TraceStats tri = degree_stats(uniform_triangle());
  EXPECT_EQ(tri.n, 3u);
  EXPECT_EQ(tri.m, 3u);
  EXPECT_EQ(tri.min_degree, 2u);
  EXPECT_EQ(tri.max_degree, 2u);
  EXPECT_DOUBLE_EQ(tri.avg_degree(), 2.0);
  EXPECT_NEAR(tri.entropy, std::log2(3.0), 1e-12);
  EXPECT_NEAR(tri.cond_entropy, 1.0, 1e-12);

  const TraceStats s4 = degree_stats(star(4));
  EXPECT_EQ(s4.n, 5u);
  EXPECT_EQ(s4.m, 4u);
  EXPECT_EQ(s4.min_degree, 1u);
  EXPECT_EQ(s4.max_degree, 4u);
  EXPECT_DOUBLE_EQ(s4.avg_degree(), 1.6);
  EXPECT_NEAR(s4.entropy, 2.0, 1e-12);
  EXPECT_NEAR(s4.cond_entropy, 1.0, 1e-12);

  const TraceStats one = degree_stats(single_edge());
  EXPECT_EQ(one.min_degree, 1u);
  EXPECT_EQ(one.max_degree, 1u);
  EXPECT_DOUBLE_EQ(one.avg_degree(), 1.0);
  EXPECT_NEAR(one.entropy, 0.0, 1e-12);
  EXPECT_NEAR(one.cond_entropy, 0.0, 1e-12);
}

TEST(DemandProperties, MarginalsSumToTwo) {
  for (const DemandGraph& g : testing::random_corpus(200, 11)) {
    double total = 0.0;
    double edges = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) total += marginal(g, v);
    for (const DemandEdge& e : g.edges()) edges += e.weight;
    EXPECT_NEAR(total, 2.0, 1e-9);
    EXPECT_NEAR(edges, 1.0, 1e-9);
  }
}

TEST(DemandProperties, StatsOrdering) {
  for (const DemandGraph& g : testing::random_corpus(100, 12)) {
    const TraceStats s = degree_stats(g);
    EXPECT_LE(static_cast<double>(s.min_degree), s.avg_degree());
    EXPECT_LE(s.avg_degree(), static_cast<double>(s.max_degree));
    EXPECT_DOUBLE_EQ(s.avg_degree(), 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count()));
    EXPECT_GE(s.entropy, 0.0);
    EXPECT_GE(s.cond_entropy, 0.0);
  }
}

Distribution make(const std::vector<double>& p) {
  std::vector<Distribution::Entry> entries;
  for (std::size_t i = 0; i < p.size(); ++i) entries.push_back({static_cast<std::uint32_t>(i), p[i]});
  return Distribution::from_weights(entries);
}

TEST(EntropyProperties, BaseChange) {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Distribution p = make(testing::random_probabilities(rng, 2 + rng.below(40)));
    const int d = 2 + static_cast<int>(rng.below(8));
    EXPECT_NEAR(entropy_base_d(p, d), entropy_base_d(p, 2) / std::log2(d), 1e-9);
  }
}

TEST(EntropyProperties, GroupingRule) {
  Rng rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<double> p = testing::random_probabilities(rng, 3 + rng.below(30));
    const int d = 2 + static_cast<int>(rng.below(5));
    const std::size_t m = p.size();
    const double tail = p[m - 2] + p[m - 1];
    std::vector<double> q(p.begin(), p.end() - 2);
    q.push_back(tail);
    const double lhs = entropy_base_d(make(p), d);
    const double rhs = entropy_base_d(make(q), d) + tail * entropy_base_d(make({p[m - 2] / tail, p[m - 1] / tail}), d);
    EXPECT_NEAR(lhs, rhs, 1e-9);
    EXPECT_LE(entropy_base_d(make(q), d), lhs + 1e-12);
  }
}

TEST(DistributionTest, Validation) {
  EXPECT_THROW(Distribution({{0, 0.5}, {1, 0.4}}), Error);
  EXPECT_THROW(Distribution({{0, 0.5}, {0, 0.5}}), Error);
  const Distribution d({{0, 0.5}, {1, 0.0}, {2, 0.5}});
  EXPECT_EQ(d.size(), 2u);
}

}  // namespace
}  // namespace dan
