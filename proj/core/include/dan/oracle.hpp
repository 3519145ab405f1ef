#pragma once

#include <cstddef>
#include <cstdint>

#include "dan/demand_graph.hpp"
#include "dan/host_graph.hpp"

namespace dan {

struct OracleResult {
  HostGraph host;
  double epl = 0.0;
  // Complete host graphs whose cost was evaluated.
  std::uint64_t candidates = 0;
};

// Largest total node count (demand plus Steiner) the exhaustive search accepts.
inline constexpr std::size_t kOracleMaxNodes = 7;

// Minimum expected path length over all simple graphs on the demand nodes
// with maximum degree delta. Ties within 1e-12 go to the lexicographically
// smallest sorted edge list. Throws "instance too large for oracle" beyond
// kOracleMaxNodes, and when no host connects every demand pair.
OracleResult optimal_host(const DemandGraph& g, int delta);

// Same, also allowing up to max_steiner extra nodes. Only hosts whose Steiner
// nodes all have degree at least 3 are enumerated (a Steiner node of smaller
// degree can be removed or short-circuited without lengthening any path), and
// Steiner labels are canonicalized by their neighborhoods among the demand
// nodes. The smallest Steiner count wins ties.
OracleResult optimal_host_steiner(const DemandGraph& g, int delta, std::size_t max_steiner);

}  // namespace dan
