#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dan/demand_graph.hpp"
#include "dan/evaluator.hpp"
#include "dan/heuristics.hpp"
#include "dan/host_graph.hpp"

namespace dan {

enum class Algorithm { sni, db, tb, fixed, rtree, rgraph, ges, ged, hed };

// Tags as used on the command line: sni, db, tb, fixed, rtree, rgraph, ges,
// ged, hed. parse_algorithm throws on anything else.
Algorithm parse_algorithm(std::string_view tag);
std::string_view algorithm_tag(Algorithm algorithm);
bool is_randomized(Algorithm algorithm);
// db and tb pick their own degree bound.
bool takes_degree_bound(Algorithm algorithm);

struct DesignOptions {
  FixedDegreeOptions fixed;
};

struct DesignResult {
  Algorithm algorithm = Algorithm::sni;
  HostGraph host;
  std::optional<std::string> failure;
  Epl epl = Epl::infinite();
  std::size_t max_degree = 0;
  std::size_t steiner = 0;
  // Wall time of the construction only, excluding evaluation.
  double runtime_ms = 0.0;
  // Set for randomized algorithms.
  std::optional<std::uint64_t> seed;

  bool ok() const { return !failure.has_value(); }
};

// Runs one algorithm and evaluates its host. Precondition violations of the
// algorithm (for example delta < 3 for sni) are thrown; algorithm failures
// are reported in the result.
DesignResult design(const DemandGraph& g, Algorithm algorithm, int delta, std::uint64_t seed,
                    const DesignOptions& options = {});

}  // namespace dan
