#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dan/demand_graph.hpp"
#include "dan/host_graph.hpp"
#include "dan/rng.hpp"
#include "dan/sni.hpp"

namespace dan {

// Result of a degree-respecting heuristic. The host is always filled in, also
// on failure, so callers can inspect what was built.
struct HeuristicOutcome {
  std::string algorithm;
  std::uint64_t seed = 0;
  HostGraph host;
  std::optional<std::string> failure;

  bool ok() const { return !failure.has_value(); }
};

// Longest prefix of the demand edges, sorted by descending weight (ties by
// ascending (u, v)), whose renormalized induced instance gets an SNI host of
// at most `budget` nodes. Found by binary search over the prefix length.
struct HeavyPrefix {
  std::vector<std::uint32_t> edges;  // indices into g.edges(), in prefix order
  std::vector<NodeId> nodes;         // compact id -> node of g, ascending
  DemandGraph instance;              // renormalized prefix over compact ids
  SniResult sni;                     // SNI on `instance`; empty host if no edges
};
HeavyPrefix heavy_prefix(const DemandGraph& g, int d1, std::size_t budget, SniOptions options = {});

struct FixedDegreeOptions {
  // d2; the heavy part gets delta - light_degree.
  int light_degree = 3;
  // Fill remaining degree capacity with random edges afterwards.
  bool densify = false;
};

// Fixed-degree heuristic for delta >= 6. The SNI host of the heavy prefix is
// embedded with its Steiner nodes placed on nodes outside the prefix
// (ascending id), then overlaid with a random light_degree-regular graph on
// all nodes. The overlay is resampled until connected (at most 32 draws) and
// otherwise replaced by a deterministic (light_degree-1)-ary tree.
HeuristicOutcome fixed_degree(const DemandGraph& g, int delta, std::uint64_t seed, FixedDegreeOptions options = {});

// Random tree of arity delta - 1, built layer by layer over a random
// permutation of the nodes.
HeuristicOutcome random_tree(const DemandGraph& g, int delta, std::uint64_t seed);

// Adds random edges between nodes of degree below min(delta, n - 1) until no
// such edge can be added. Restarts up to 64 times while the result is not
// regular (once when n * delta is odd) and returns the last attempt.
HostGraph random_regular(std::size_t n, int delta, std::uint64_t seed);
HostGraph random_regular(std::size_t n, int delta, Rng& rng);

// Adds random edges to `host` between nodes of degree below `cap` until the
// host is edge-maximal under that cap.
void fill_random_edges(HostGraph& host, int cap, Rng& rng);

// random_regular as a design: resampled until every demand pair is connected,
// at most 32 draws, after which the outcome is a failure.
HeuristicOutcome random_graph_design(const DemandGraph& g, int delta, std::uint64_t seed);

// Adds demand edges by descending weight while both endpoints stay within
// delta. Fails when a demand pair ends up disconnected.
HeuristicOutcome greedy_edge_selection(const DemandGraph& g, int delta);

// Starts from the demand graph and, in one pass over the edges by ascending
// weight (ties by ascending (u, v)), deletes every edge with an over-degree
// endpoint unless it is a bridge. A spanning tree is maintained so that only
// tree-edge deletions need a search for a replacement edge. Fails when the
// demand graph is disconnected or some degree still exceeds delta.
HeuristicOutcome greedy_edge_deletion(const DemandGraph& g, int delta);

// Greedy edge deletion, falling back when it fails to an SNI stage on the
// renormalized deletion output: heavy prefix at full delta with one extra
// child allowed at each tree root, Steiner nodes placed on unused nodes, then
// random edges up to delta. Returns the deletion result unchanged when that
// succeeds.
HeuristicOutcome hybrid_edge_deletion(const DemandGraph& g, int delta, std::uint64_t seed);

}  // namespace dan
