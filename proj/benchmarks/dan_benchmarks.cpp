#include <benchmark/benchmark.h>

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "dan/demand_graph.hpp"
#include "dan/evaluator.hpp"
#include "dan/heuristics.hpp"
#include "dan/huffman.hpp"
#include "dan/rng.hpp"
#include "dan/sni.hpp"

namespace {

double unit(dan::Rng& rng) { return static_cast<double>((rng.next() >> 11) + 1) * 0x1.0p-53; }

// About four heavy-tailed demand edges per node.
dan::DemandGraph skewed(std::size_t n, std::uint64_t seed) {
  dan::Rng rng(seed);
  std::set<std::pair<dan::NodeId, dan::NodeId>> pairs;
  for (dan::NodeId v = 1; v < n; ++v) pairs.emplace(static_cast<dan::NodeId>(rng.below(v)), v);
  while (pairs.size() < 4 * n) {
    const auto a = static_cast<dan::NodeId>(rng.below(n));
    const auto b = static_cast<dan::NodeId>(rng.below(n));
    if (a != b) pairs.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<dan::DemandEdge> raw;
  for (const auto& [a, b] : pairs) raw.push_back({a, b, std::pow(unit(rng), -1.0 / 1.1)});
  return dan::normalize(n, raw);
}

void BM_Huffman(benchmark::State& state) {
  dan::Rng rng(1);
  std::vector<dan::Distribution::Entry> weights;
  for (std::uint32_t i = 0; i < state.range(0); ++i) weights.push_back({i, unit(rng)});
  const dan::Distribution dist = dan::Distribution::from_weights(weights);
  for (auto _ : state) benchmark::DoNotOptimize(dan::build_huffman(dist, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Huffman)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oNLogN);

void BM_Sni(benchmark::State& state) {
  const dan::DemandGraph g = skewed(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dan::steiner_node_insertion(g, 8));
  state.SetComplexityN(static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_Sni)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

void BM_ExpectedPathLength(benchmark::State& state) {
  const dan::DemandGraph g = skewed(static_cast<std::size_t>(state.range(0)), 3);
  const dan::HostGraph host = dan::steiner_node_insertion(g, 8).host;
  for (auto _ : state) benchmark::DoNotOptimize(dan::expected_path_length(g, host));
}
BENCHMARK(BM_ExpectedPathLength)->RangeMultiplier(4)->Range(64, 4096);

void BM_FixedDegree(benchmark::State& state) {
  const dan::DemandGraph g = skewed(static_cast<std::size_t>(state.range(0)), 4);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dan::fixed_degree(g, 16, seed++));
}
BENCHMARK(BM_FixedDegree)->RangeMultiplier(4)->Range(64, 4096);

void BM_GreedyEdgeDeletion(benchmark::State& state) {
  const dan::DemandGraph g = skewed(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(dan::greedy_edge_deletion(g, 8));
}
BENCHMARK(BM_GreedyEdgeDeletion)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
