#include "dan/design.hpp"

#include <array>
#include <chrono>
#include <string>

#include "dan/balancing.hpp"
#include "dan/error.hpp"
#include "dan/sni.hpp"

namespace dan {

namespace {

constexpr std::array<std::string_view, 9> kTags = {"sni", "db", "tb", "fixed", "rtree", "rgraph", "ges", "ged", "hed"};

}  // namespace

Algorithm parse_algorithm(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i) {
    if (kTags[i] == tag) return static_cast<Algorithm>(i);
  }
  throw Error("unknown algorithm '" + std::string(tag) + "'");
}

std::string_view algorithm_tag(Algorithm algorithm) { return kTags.at(static_cast<std::size_t>(algorithm)); }

bool is_randomized(Algorithm algorithm) {
  return algorithm == Algorithm::fixed || algorithm == Algorithm::rtree || algorithm == Algorithm::rgraph ||
         algorithm == Algorithm::hed;
}

bool takes_degree_bound(Algorithm algorithm) { return algorithm != Algorithm::db && algorithm != Algorithm::tb; }

DesignResult design(const DemandGraph& g, Algorithm algorithm, int delta, std::uint64_t seed,
                    const DesignOptions& options) {
  DesignResult result;
  result.algorithm = algorithm;
  if (is_randomized(algorithm)) result.seed = seed;

  const auto start = std::chrono::steady_clock::now();
  switch (algorithm) {
    case Algorithm::sni:
      result.host = steiner_node_insertion(g, delta).host;
      break;
    case Algorithm::db:
      result.host = demand_balancing(g).host;
      break;
    case Algorithm::tb:
      result.host = threshold_balancing(g).host;
      break;
    default: {
      HeuristicOutcome outcome;
      switch (algorithm) {
        case Algorithm::fixed:
          outcome = fixed_degree(g, delta, seed, options.fixed);
          break;
        case Algorithm::rtree:
          outcome = random_tree(g, delta, seed);
          break;
        case Algorithm::rgraph:
          outcome = random_graph_design(g, delta, seed);
          break;
        case Algorithm::ges:
          outcome = greedy_edge_selection(g, delta);
          break;
        case Algorithm::ged:
          outcome = greedy_edge_deletion(g, delta);
          break;
        default:
          outcome = hybrid_edge_deletion(g, delta, seed);
          break;
      }
      result.host = std::move(outcome.host);
      result.failure = std::move(outcome.failure);
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  result.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  result.epl = expected_path_length(g, result.host);
  result.max_degree = result.host.max_degree();
  result.steiner = result.host.steiner_count();
  return result;
}

}  // namespace dan
